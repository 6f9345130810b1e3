#pragma once

#include <string>
#include <vector>

#include "zzpa/poly.hpp"

namespace zzpa {

// Number of distinct real roots of p in the open interval (a, b) by Sturm's
// theorem. Throws input_error when p vanishes at an endpoint (perturb the
// interval instead).
int sturm_count(const RatPoly& p, const Rat& a, const Rat& b);
int sturm_count(const IntPoly& p, const Rat& a, const Rat& b);

// A real algebraic number: a square-free primitive defining polynomial with
// positive leading coefficient plus a rational isolating interval (lo, hi)
// containing exactly one root of the defining polynomial, with
// defining(lo) * defining(hi) < 0. Values are immutable; refinement returns
// new objects with narrower intervals describing the same number.
class AlgebraicReal {
public:
    // Validates the isolation certificate (sign change + Sturm count 1).
    AlgebraicReal(IntPoly defining, Rat lo, Rat hi);

    static AlgebraicReal from_rational(const Rat& r);

    const IntPoly& defining() const { return defining_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }

    AlgebraicReal refined(int bisections = 1) const;
    AlgebraicReal refined_below_width(const Rat& w) const;

    // Three-way comparisons; exact, terminating.
    int compare(const Rat& q) const;
    int compare(const AlgebraicReal& other) const;
    bool is_integer() const;

    Int floor() const;
    double approx() const;
    // Fixed-point decimal with the given number of places, rounded
    // half-to-even on the exact value.
    std::string decimal(int places) const;

private:
    IntPoly defining_;
    Rat lo_, hi_;
    int sign_lo_; // sign of defining_ at lo_, cached

    AlgebraicReal() = default;
    void bisect(); // in-place, private: public refinement is by value
};

// True iff x is a root of F (F == 0 counts as vanishing everywhere).
bool vanishes_at(const AlgebraicReal& x, const IntPoly& F);

// One AlgebraicReal per distinct real root of p, ascending. The defining
// polynomial of every returned root is the square-free part of p.
std::vector<AlgebraicReal> isolate_real_roots(const IntPoly& p);

// Largest real root of p, which must exceed 1; otherwise input_error
// ("no expanding root").
AlgebraicReal perron_root(const IntPoly& p);

// 1 + max |c_i| / |lead|, an upper bound for the absolute value of all
// complex (hence all real) roots.
Rat cauchy_bound(const IntPoly& p);

// n / 10^places rendered as a fixed-point decimal string.
std::string format_scaled_integer(const Int& n, int places);

Int pow10(int k);
Rat rat_floor(const Rat& q); // greatest integer <= q, as a Rat
Int rat_floor_int(const Rat& q);

} // namespace zzpa
