#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zzpa {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Z. Coefficients are stored ascending by
// degree with a nonzero leading coefficient; the zero polynomial stores
// nothing and has degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(Int c);
    static IntPoly monomial(int deg, Int c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_monic() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    IntPoly derivative() const;
    // gcd of all coefficients, always >= 0; the zero polynomial has content 0.
    Int content() const;
    // p / content(p), normalized to a positive leading coefficient.
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    bool operator==(const IntPoly&) const = default;

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Int> c_;
    void trim();
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const Int& k);

// Dense univariate polynomial over Q, same normalization as IntPoly.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    RatPoly(std::initializer_list<long> coeffs);
    explicit RatPoly(const IntPoly& p);

    static RatPoly constant(Rat c);
    static RatPoly monomial(int deg, Rat c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int i) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;

    RatPoly derivative() const;
    RatPoly monic() const;
    // Smallest integer multiple: returns primitive IntPoly with positive
    // leading coefficient (equal to this up to a positive rational factor).
    IntPoly clear_denominators() const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    bool operator==(const RatPoly&) const = default;

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Rat> c_;
    void trim();
};

RatPoly operator+(RatPoly a, const RatPoly& b);
RatPoly operator-(RatPoly a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const Rat& k);

// Euclidean division. For IntPoly the quotient and remainder must both come
// out integral (always the case for monic divisors); otherwise input_error.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b);

// gcd conventions: monic over Q; primitive with positive leading coefficient
// over Z (coefficient contents are discarded, only the polynomial part of the
// gcd is returned).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'), primitive with positive leading coefficient. Keeps exactly
// the distinct roots of p, each with multiplicity one.
IntPoly square_free_part(const IntPoly& p);

// t^deg(p) * p(1/t).
IntPoly reverse_poly(const IntPoly& p);

// True iff p equals its own reversal, i.e. the coefficient sequence is a
// palindrome; then the root multiset is closed under x -> 1/x.
bool is_reciprocal(const IntPoly& p);

// For reciprocal p of even degree 2g (or (t+1) times such, which covers all
// odd-degree reciprocal polynomials), the unique q of degree g with
// p(t) = t^g q(t + 1/t) after removing the forced (t+1) factor.
// Throws input_error when p has no such form.
IntPoly companion_polynomial(const IntPoly& p);

// Inverse of companion_polynomial: t^g q(t + 1/t), times (t+1) if requested.
IntPoly expand_companion(const IntPoly& q, bool times_t_plus_one);

// n-th cyclotomic polynomial (n >= 1), computed by the divisor recurrence and
// memoized per process.
IntPoly cyclotomic(int n);

int euler_phi(int n);

// Smallest n with cyclotomic(n) dividing p, searching n <= 2*deg(p)^2
// (indices with euler_phi(n) > deg(p) are skipped since those cyclotomics
// cannot divide). nullopt when no cyclotomic factor exists in that range.
std::optional<int> cyclotomic_factor_witness(const IntPoly& p);

} // namespace zzpa
