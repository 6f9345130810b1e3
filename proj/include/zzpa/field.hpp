#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "zzpa/algebraic.hpp"
#include "zzpa/poly.hpp"

namespace zzpa {

// Number field Q(root) presented as Q[t]/(minpoly). The stored minpoly is the
// square-free part of the polynomial handed to make(), with the factor t and
// all cyclotomic factors not vanishing at the root divided out. For every map
// family handled here that residue is the minimal polynomial of the root;
// arithmetic below stays correct even when it is merely a multiple of it,
// because zero tests fall back to an exact gcd certificate.
class FieldContext {
  public:
    static std::shared_ptr<const FieldContext> make(const IntPoly& defining,
                                                    const AlgebraicReal& root);

    const IntPoly& minpoly() const { return minpoly_; }
    const RatPoly& minpoly_q() const { return minpoly_q_; }
    const AlgebraicReal& root() const { return root_; }
    int degree() const { return minpoly_.degree(); }

    // Shared, monotonically shrinking isolating interval for the root. Sign
    // decisions refine a local copy and donate the narrower interval back.
    AlgebraicReal current_root() const;
    void absorb_refinement(const AlgebraicReal& refined) const;

  private:
    FieldContext(IntPoly mp, AlgebraicReal root);

    IntPoly minpoly_;
    RatPoly minpoly_q_;
    AlgebraicReal root_;
    mutable AlgebraicReal shared_root_;
    mutable std::mutex mu_;
};

using FieldContextPtr = std::shared_ptr<const FieldContext>;

// Element of the field: a rational polynomial in the root, reduced mod the
// context's minpoly. Comparisons are by value, never by representation.
class FieldElement {
  public:
    FieldElement(FieldContextPtr ctx, RatPoly numerator);

    static FieldElement generator(const FieldContextPtr& ctx);
    static FieldElement from_rat(const FieldContextPtr& ctx, const Rat& r);
    static FieldElement zero(const FieldContextPtr& ctx);
    static FieldElement one(const FieldContextPtr& ctx);

    const RatPoly& numerator() const { return num_; }
    const FieldContextPtr& context() const { return ctx_; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) {
        a += b;
        return a;
    }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) {
        a -= b;
        return a;
    }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) {
        a *= b;
        return a;
    }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) {
        a /= b;
        return a;
    }

    // Throws verification_error on division by zero: every division in the
    // callers is backed by a nonvanishing argument, so hitting zero means a
    // broken invariant, not bad user input.
    FieldElement inverse() const;
    FieldElement pow(unsigned long e) const;

    bool is_zero() const;
    // -1, 0, 1. Nonzero signs are decided by refining the root interval; the
    // refinement budget is ZZPA_MAX_BISECTIONS (default 512) and exhaustion
    // throws undecided_error.
    int sign() const;
    int compare(const FieldElement& o) const;
    int compare(const Rat& r) const;
    bool operator==(const FieldElement& o) const { return compare(o) == 0; }
    bool operator!=(const FieldElement& o) const { return compare(o) != 0; }

    // Fixed-point rendering with round half to even; exact ties are detected
    // algebraically, so output never depends on interval luck.
    std::string decimal(int places) const;
    double approx() const;
    std::string to_string(const std::string& var = "t") const;

  private:
    FieldContextPtr ctx_;
    RatPoly num_;

    void require_same_context(const FieldElement& o) const;
};

FieldElement evaluate(const IntPoly& p, const FieldElement& x);
FieldElement evaluate(const RatPoly& p, const FieldElement& x);

int max_sign_bisections();

}  // namespace zzpa
