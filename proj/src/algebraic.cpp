#include "zzpa/algebraic.hpp"

#include <algorithm>
#include <cassert>

#include "zzpa/error.hpp"

namespace zzpa {

namespace {

int sign_of(const Rat& q) { return sgn(q); }

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly r = -divmod(a, b).second;
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int variations = 0, prev = 0;
    for (const RatPoly& s : chain) {
        int cur = sign_of(s.eval(x));
        if (cur == 0) continue;
        if (prev != 0 && cur != prev) ++variations;
        prev = cur;
    }
    return variations;
}

} // namespace

int sturm_count(const RatPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw input_error("sturm_count of the zero polynomial");
    if (a >= b) throw input_error("sturm_count requires a < b");
    if (p.eval(a) == 0 || p.eval(b) == 0)
        throw input_error("sturm_count endpoint is a root; perturb the interval");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

int sturm_count(const IntPoly& p, const Rat& a, const Rat& b) {
    return sturm_count(RatPoly(p), a, b);
}

// ---------------------------------------------------------------------------
// AlgebraicReal

AlgebraicReal::AlgebraicReal(IntPoly defining, Rat lo, Rat hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (defining_.degree() < 1) throw input_error("defining polynomial must be nonconstant");
    if (lo_ >= hi_) throw input_error("isolating interval is empty");
    sign_lo_ = sign_of(defining_.eval(lo_));
    const int sign_hi = sign_of(defining_.eval(hi_));
    if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi)
        throw input_error("isolating interval lacks a sign change");
    if (sturm_count(defining_, lo_, hi_) != 1)
        throw input_error("isolating interval does not contain exactly one root");
}

AlgebraicReal AlgebraicReal::from_rational(const Rat& r) {
    IntPoly defining(std::vector<Int>{-r.get_num(), r.get_den()});
    return AlgebraicReal(defining.primitive_part(), r - 1, r + 1);
}

void AlgebraicReal::bisect() {
    Rat mid = (lo_ + hi_) / 2;
    int s = sign_of(defining_.eval(mid));
    if (s == 0) {
        // mid is the root itself; shrink to a symmetric window around it.
        // The window endpoints cannot be roots (mid is the only root here).
        Rat w = (hi_ - lo_) / 8;
        lo_ = mid - w;
        hi_ = mid + w;
        sign_lo_ = sign_of(defining_.eval(lo_));
        return;
    }
    if (s == sign_lo_) {
        lo_ = std::move(mid);
    } else {
        hi_ = std::move(mid);
    }
}

AlgebraicReal AlgebraicReal::refined(int bisections) const {
    AlgebraicReal r = *this;
    for (int i = 0; i < bisections; ++i) r.bisect();
    return r;
}

AlgebraicReal AlgebraicReal::refined_below_width(const Rat& w) const {
    AlgebraicReal r = *this;
    while (r.width() >= w) r.bisect();
    return r;
}

int AlgebraicReal::compare(const Rat& q) const {
    if (q <= lo_) return 1;
    if (q >= hi_) return -1;
    if (defining_.eval(q) == 0) return 0; // q is the unique root in the interval
    AlgebraicReal r = *this;
    while (r.lo_ < q && q < r.hi_) r.bisect();
    return q <= r.lo_ ? 1 : -1;
}

int AlgebraicReal::compare(const AlgebraicReal& other) const {
    // Equality is decidable up front: the two are equal iff this value is a
    // root of the other's defining polynomial lying strictly inside the
    // other's isolating interval. Afterwards bisection must separate them.
    if (!(hi_ <= other.lo_ || other.hi_ <= lo_)) {
        if (vanishes_at(*this, other.defining_) && compare(other.lo_) > 0 &&
            compare(other.hi_) < 0)
            return 0;
    }
    AlgebraicReal a = *this, b = other;
    while (true) {
        if (a.hi_ <= b.lo_) return -1;
        if (b.hi_ <= a.lo_) return 1;
        a.bisect();
        b.bisect();
    }
}

bool AlgebraicReal::is_integer() const {
    // An integer value would be an integer root of the defining polynomial
    // inside (lo, hi); those candidates are floor(lo)+1 .. floor(hi).
    for (Int n = rat_floor_int(lo_) + 1; Rat(n) <= hi_; ++n)
        if (defining_.eval(n) == 0) return true;
    return false;
}

Int AlgebraicReal::floor() const {
    for (Int n = rat_floor_int(lo_) + 1; Rat(n) <= hi_; ++n)
        if (defining_.eval(n) == 0) return n; // the value is exactly n
    AlgebraicReal r = *this;
    while (rat_floor_int(r.lo_) != rat_floor_int(r.hi_)) r.bisect();
    return rat_floor_int(r.lo_);
}

double AlgebraicReal::approx() const {
    AlgebraicReal r = refined_below_width(Rat(1, Int(1) << 60));
    Rat mid = (r.lo_ + r.hi_) / 2;
    return mid.get_d();
}

std::string AlgebraicReal::decimal(int places) const {
    if (places < 0) throw input_error("decimal places must be >= 0");
    const Int S = pow10(places);
    AlgebraicReal r = refined_below_width(Rat(1, S));
    Int k = rat_floor_int(r.lo_ * Rat(S));
    if (compare(Rat(k + 1) / Rat(S)) >= 0) k += 1;
    // k/S <= value < (k+1)/S; round half to even on the scaled value.
    const int t = compare(Rat(2 * k + 1) / Rat(2 * S));
    Int n;
    if (t > 0) {
        n = k + 1;
    } else if (t < 0) {
        n = k;
    } else {
        n = (k % 2 == 0) ? k : k + 1;
    }
    return format_scaled_integer(n, places);
}

bool vanishes_at(const AlgebraicReal& x, const IntPoly& F) {
    if (F.is_zero()) return true;
    if (F.degree() == 0) return false;
    IntPoly g = gcd(x.defining(), F);
    if (g.degree() < 1) return false;
    // Roots of g lie among roots of x's defining polynomial, and x is the only
    // one of those in the isolating interval. Endpoints are never roots.
    return sturm_count(g, x.lo(), x.hi()) == 1;
}

// ---------------------------------------------------------------------------
// Root isolation

Rat cauchy_bound(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw input_error("cauchy_bound requires a nonconstant polynomial");
    Rat maxratio(0);
    Int lead = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rat r(abs(p.coeff(i)), lead);
        r.canonicalize();
        if (r > maxratio) maxratio = r;
    }
    return maxratio + 1;
}

namespace {

void isolate_range(const IntPoly& sf, const Rat& lo, const Rat& hi,
                   std::vector<AlgebraicReal>& out) {
    const int count = sturm_count(sf, lo, hi);
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(sf, lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (sf.eval(mid) == 0) {
        // mid is a root; carve out a window around it whose endpoints are not
        // roots and which isolates mid from the others.
        Rat w = (hi - lo) / 4;
        while (sf.eval(mid - w) == 0 || sf.eval(mid + w) == 0 ||
               sturm_count(sf, mid - w, mid + w) != 1) {
            w /= 2;
        }
        isolate_range(sf, lo, mid - w, out);
        out.emplace_back(sf, mid - w, mid + w);
        isolate_range(sf, mid + w, hi, out);
        return;
    }
    isolate_range(sf, lo, mid, out);
    isolate_range(sf, mid, hi, out);
}

} // namespace

std::vector<AlgebraicReal> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw input_error("cannot isolate roots of the zero polynomial");
    if (p.degree() == 0) return {};
    IntPoly sf = square_free_part(p);
    if (sf.degree() == 0) return {};
    // Integer bound strictly beyond every root, so the endpoints are safe.
    Rat b = cauchy_bound(sf);
    Int bound = rat_floor_int(b) + 1;
    std::vector<AlgebraicReal> out;
    isolate_range(sf, Rat(-bound), Rat(bound), out);
    return out;
}

AlgebraicReal perron_root(const IntPoly& p) {
    std::vector<AlgebraicReal> roots = isolate_real_roots(p);
    if (roots.empty()) throw input_error("no expanding root: polynomial has no real roots");
    const AlgebraicReal& top = roots.back();
    if (top.compare(Rat(1)) <= 0)
        throw input_error("no expanding root: largest real root is <= 1");
    return top;
}

// ---------------------------------------------------------------------------
// Decimal formatting helpers

Int pow10(int k) {
    Int r(1);
    for (int i = 0; i < k; ++i) r *= 10;
    return r;
}

Rat rat_floor(const Rat& q) { return Rat(rat_floor_int(q)); }

Int rat_floor_int(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

std::string format_scaled_integer(const Int& n, int places) {
    const bool neg = n < 0;
    Int a = abs(n);
    if (places == 0) return (neg ? "-" : "") + a.get_str();
    const Int S = pow10(places);
    Int ip = a / S;
    Int fp = a % S;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), places - frac.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

} // namespace zzpa
