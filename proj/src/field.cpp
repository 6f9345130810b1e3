#include "zzpa/field.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "zzpa/error.hpp"

namespace zzpa {

namespace {

int sign_of(const Rat& q) { return sgn(q); }

struct RatInterval {
    Rat lo, hi;

    bool positive() const { return sign_of(lo) > 0; }
    bool negative() const { return sign_of(hi) < 0; }
    Rat width() const { return hi - lo; }
};

RatInterval interval_mul(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
}

// Exact enclosure of p over the interval [xlo, xhi] by Horner's scheme.
RatInterval horner_interval(const RatPoly& p, const Rat& xlo, const Rat& xhi) {
    if (p.is_zero()) return {Rat(0), Rat(0)};
    RatInterval x{xlo, xhi};
    RatInterval acc{p.leading(), p.leading()};
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = interval_mul(acc, x);
        Rat c = p.coeff(i);
        acc.lo += c;
        acc.hi += c;
    }
    return acc;
}

// a*u + b*v = g for the returned (g, u); g is monic.
std::pair<RatPoly, RatPoly> extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0 = RatPoly::constant(1), u1;
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        RatPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) return {r0, u0};
    Rat inv_lead = Rat(1) / r0.leading();
    return {r0 * inv_lead, u0 * inv_lead};
}

IntPoly divide_out_t(const IntPoly& p) {
    std::vector<Int> c(p.coeffs().begin() + 1, p.coeffs().end());
    return IntPoly(std::move(c));
}

}  // namespace

int max_sign_bisections() {
    static const int cap = [] {
        const char* s = std::getenv("ZZPA_MAX_BISECTIONS");
        if (!s || !*s) return 512;
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end == s || *end != '\0' || v < 16 || v > 100000000) return 512;
        return static_cast<int>(v);
    }();
    return cap;
}

FieldContext::FieldContext(IntPoly mp, AlgebraicReal root)
    : minpoly_(std::move(mp)),
      minpoly_q_(RatPoly(minpoly_).monic()),
      root_(root),
      shared_root_(std::move(root)) {}

FieldContextPtr FieldContext::make(const IntPoly& defining,
                                   const AlgebraicReal& root) {
    if (defining.is_zero() || defining.degree() < 1)
        throw input_error("field context needs a nonconstant defining polynomial");
    if (!vanishes_at(root, defining))
        throw input_error("field context root is not a root of the defining polynomial");

    IntPoly p = square_free_part(defining);
    bool root_is_zero = root.compare(Rat(0)) == 0;
    while (p.degree() > 1 && p.coeff(0) == 0 && !root_is_zero)
        p = divide_out_t(p);
    while (p.degree() > 1) {
        auto n = cyclotomic_factor_witness(p);
        if (!n) break;
        IntPoly phi = cyclotomic(*n);
        if (vanishes_at(root, phi)) {
            // Real cyclotomic roots are only +-1, so the root is rational here.
            p = phi;
            break;
        }
        auto [q, r] = divmod(p, phi);
        if (!r.is_zero())
            throw verification_error("cyclotomic witness failed to divide");
        p = q.primitive_part();
    }

    // The endpoints are non-roots of `defining`, hence of p, and the interval
    // still isolates: the constructor re-checks the certificate.
    AlgebraicReal cleaned(p, root.lo(), root.hi());
    return std::shared_ptr<const FieldContext>(
        new FieldContext(std::move(p), std::move(cleaned)));
}

AlgebraicReal FieldContext::current_root() const {
    std::lock_guard<std::mutex> lock(mu_);
    return shared_root_;
}

void FieldContext::absorb_refinement(const AlgebraicReal& refined) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (refined.width() < shared_root_.width()) shared_root_ = refined;
}

FieldElement::FieldElement(FieldContextPtr ctx, RatPoly numerator)
    : ctx_(std::move(ctx)), num_(std::move(numerator)) {
    if (!ctx_) throw input_error("field element without context");
    if (num_.degree() >= ctx_->degree())
        num_ = divmod(num_, ctx_->minpoly_q()).second;
}

FieldElement FieldElement::generator(const FieldContextPtr& ctx) {
    return FieldElement(ctx, RatPoly::monomial(1));
}

FieldElement FieldElement::from_rat(const FieldContextPtr& ctx, const Rat& r) {
    return FieldElement(ctx, RatPoly::constant(r));
}

FieldElement FieldElement::zero(const FieldContextPtr& ctx) {
    return FieldElement(ctx, RatPoly());
}

FieldElement FieldElement::one(const FieldContextPtr& ctx) {
    return FieldElement(ctx, RatPoly::constant(1));
}

void FieldElement::require_same_context(const FieldElement& o) const {
    if (ctx_.get() != o.ctx_.get())
        throw std::logic_error("field elements from different contexts");
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    require_same_context(o);
    num_ += o.num_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    require_same_context(o);
    num_ -= o.num_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    require_same_context(o);
    num_ = divmod(num_ * o.num_, ctx_->minpoly_q()).second;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    *this *= o.inverse();
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw verification_error("division by zero in number field");
    // When the modulus is irreducible one extended gcd suffices. If it is
    // merely square-free the gcd can be a proper factor; the root then lives
    // in the cofactor and the computation restarts modulo that, which keeps
    // the result correct as a value.
    RatPoly h = ctx_->minpoly_q();
    RatPoly a = num_;
    while (true) {
        auto [g, u] = extended_gcd(a, h);
        if (g.degree() == 0)
            return FieldElement(ctx_, u);  // g is monic: g == 1
        if (vanishes_at(ctx_->root(), g.clear_denominators()))
            throw verification_error("division by zero in number field");
        auto [q, r] = divmod(h, g);
        if (!r.is_zero())
            throw verification_error("gcd failed to divide modulus");
        h = q.monic();
        a = divmod(num_, h).second;
    }
}

FieldElement FieldElement::pow(unsigned long e) const {
    FieldElement base = *this;
    FieldElement acc = one(ctx_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::is_zero() const {
    if (num_.is_zero()) return true;
    if (num_.degree() == 0) return false;
    // Cheap interval pass first; the exact certificate is a gcd with the
    // root's defining polynomial.
    AlgebraicReal r = ctx_->current_root();
    for (int i = 0; i < 4; ++i) {
        RatInterval box = horner_interval(num_, r.lo(), r.hi());
        if (box.positive() || box.negative()) {
            ctx_->absorb_refinement(r);
            return false;
        }
        r = r.refined();
    }
    ctx_->absorb_refinement(r);
    return vanishes_at(ctx_->root(), num_.clear_denominators());
}

int FieldElement::sign() const {
    if (num_.is_zero()) return 0;
    if (num_.degree() == 0) return sign_of(num_.coeff(0));
    AlgebraicReal r = ctx_->current_root();
    int budget = max_sign_bisections();
    for (int i = 0; i < 8; ++i) {
        RatInterval box = horner_interval(num_, r.lo(), r.hi());
        if (box.positive()) {
            ctx_->absorb_refinement(r);
            return 1;
        }
        if (box.negative()) {
            ctx_->absorb_refinement(r);
            return -1;
        }
        r = r.refined();
    }
    if (vanishes_at(ctx_->root(), num_.clear_denominators())) {
        ctx_->absorb_refinement(r);
        return 0;
    }
    for (int i = 8; i <= budget; ++i) {
        RatInterval box = horner_interval(num_, r.lo(), r.hi());
        if (box.positive()) {
            ctx_->absorb_refinement(r);
            return 1;
        }
        if (box.negative()) {
            ctx_->absorb_refinement(r);
            return -1;
        }
        r = r.refined();
    }
    throw undecided_error(
        "sign of a nonzero field element undecided after " +
        std::to_string(budget) +
        " interval bisections; raise ZZPA_MAX_BISECTIONS");
}

int FieldElement::compare(const FieldElement& o) const {
    require_same_context(o);
    return (*this - o).sign();
}

int FieldElement::compare(const Rat& r) const {
    FieldElement d = *this;
    d.num_ -= RatPoly::constant(r);
    return d.sign();
}

std::string FieldElement::decimal(int places) const {
    if (places < 0) throw input_error("negative decimal places");
    Int S = pow10(places);
    Rat scale(S);

    auto finish = [&](const Int& k) {
        // k = floor(value * S); round half to even on the exact value.
        Rat tie = Rat(2 * k + 1) / Rat(2 * S);
        int c = compare(tie);
        Int rounded;
        if (c < 0)
            rounded = k;
        else if (c > 0)
            rounded = k + 1;
        else
            rounded = (k % 2 == 0) ? k : k + 1;
        return format_scaled_integer(rounded, places);
    };

    if (num_.degree() <= 0) {
        Rat v = num_.is_zero() ? Rat(0) : num_.coeff(0);
        return finish(rat_floor_int(v * scale));
    }

    AlgebraicReal r = ctx_->current_root();
    int budget = max_sign_bisections();
    for (int i = 0; i <= budget; ++i) {
        RatInterval box = horner_interval(num_, r.lo(), r.hi());
        Int a = rat_floor_int(box.lo * scale);
        Int b = rat_floor_int(box.hi * scale);
        if (a == b) {
            ctx_->absorb_refinement(r);
            return finish(a);
        }
        if (b - a == 1) {
            // The only obstruction to refinement is the exact grid value.
            Rat grid = Rat(b) / scale;
            if (compare(grid) == 0) {
                ctx_->absorb_refinement(r);
                return format_scaled_integer(b, places);
            }
        }
        r = r.refined();
    }
    throw undecided_error("decimal rendering undecided; raise ZZPA_MAX_BISECTIONS");
}

double FieldElement::approx() const {
    if (num_.is_zero()) return 0.0;
    if (num_.degree() == 0) return num_.coeff(0).get_d();
    AlgebraicReal r = ctx_->current_root();
    RatInterval box = horner_interval(num_, r.lo(), r.hi());
    for (int i = 0; i < 200; ++i) {
        Rat mag = std::max(abs(box.lo), abs(box.hi));
        if (mag < 1) mag = 1;
        if (box.width() * Rat(Int(1) << 60) <= mag) break;
        r = r.refined(4);
        box = horner_interval(num_, r.lo(), r.hi());
    }
    ctx_->absorb_refinement(r);
    Rat mid = (box.lo + box.hi) / 2;
    return mid.get_d();
}

std::string FieldElement::to_string(const std::string& var) const {
    return num_.to_string(var);
}

FieldElement evaluate(const IntPoly& p, const FieldElement& x) {
    return evaluate(RatPoly(p), x);
}

FieldElement evaluate(const RatPoly& p, const FieldElement& x) {
    FieldElement acc = FieldElement::zero(x.context());
    for (int i = p.degree(); i >= 0; --i) {
        acc *= x;
        acc += FieldElement::from_rat(x.context(), p.coeff(i));
    }
    return acc;
}

}  // namespace zzpa
