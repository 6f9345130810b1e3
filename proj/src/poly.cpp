#include "zzpa/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "zzpa/error.hpp"

namespace zzpa {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(int deg, Int c) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
    return c_[i];
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw input_error("leading coefficient of the zero polynomial");
    return c_.back();
}

bool IntPoly::is_monic() const { return !is_zero() && c_.back() == 1; }

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

Int IntPoly::content() const {
    Int g(0);
    for (const Int& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (c_.back() < 0) g = -g;
    std::vector<Int> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] / g;
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return IntPoly(std::move(d));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> d(a.degree() + b.degree() + 1, Int(0));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) d[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPoly(std::move(d));
}

IntPoly operator*(const IntPoly& a, const Int& k) {
    if (k == 0) return IntPoly();
    std::vector<Int> d(a.coeffs());
    for (Int& c : d) c *= k;
    return IntPoly(std::move(d));
}

namespace {

template <typename Coeff>
std::string poly_to_string(const std::vector<Coeff>& c, const std::string& var) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        const bool neg = c[i] < 0;
        Coeff a = neg ? Coeff(-c[i]) : c[i];
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const bool unit = (a == 1);
        if (i == 0) {
            out << a;
        } else {
            if (!unit) out << a << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace

std::string IntPoly::to_string(const std::string& var) const { return poly_to_string(c_, var); }

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) c_.emplace_back(c);
}

RatPoly RatPoly::constant(Rat c) {
    RatPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

RatPoly RatPoly::monomial(int deg, Rat c) {
    RatPoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

const Rat& RatPoly::leading() const {
    if (is_zero()) throw input_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (degree() < 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return RatPoly();
    std::vector<Rat> d(c_);
    const Rat lead = c_.back();
    for (Rat& c : d) c /= lead;
    return RatPoly(std::move(d));
}

IntPoly RatPoly::clear_denominators() const {
    if (is_zero()) return IntPoly();
    Int den(1);
    for (const Rat& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rat scaled = c_[i] * Rat(den);
        d[i] = scaled.get_num();
    }
    return IntPoly(std::move(d)).primitive_part();
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return RatPoly(std::move(d));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> d(a.degree() + b.degree() + 1, Rat(0));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) d[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return RatPoly(std::move(d));
}

RatPoly operator*(const RatPoly& a, const Rat& k) {
    if (k == 0) return RatPoly();
    std::vector<Rat> d(a.coeffs());
    for (Rat& c : d) c *= k;
    return RatPoly(std::move(d));
}

std::string RatPoly::to_string(const std::string& var) const { return poly_to_string(c_, var); }

// ---------------------------------------------------------------------------
// Division and gcd

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    const int db = b.degree();
    const Rat& lead = b.leading();
    if (static_cast<int>(rem.size()) - 1 < db) return {RatPoly(), a};
    std::vector<Rat> quo(rem.size() - db, Rat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] / lead;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod(RatPoly(a), RatPoly(b));
    std::vector<Int> qi(q.coeffs().size()), ri(r.coeffs().size());
    for (size_t i = 0; i < q.coeffs().size(); ++i) {
        const Rat& c = q.coeffs()[i];
        if (c.get_den() != 1) throw input_error("integer polynomial division is not exact");
        qi[i] = c.get_num();
    }
    for (size_t i = 0; i < r.coeffs().size(); ++i) {
        const Rat& c = r.coeffs()[i];
        if (c.get_den() != 1) throw input_error("integer polynomial division is not exact");
        ri[i] = c.get_num();
    }
    return {IntPoly(std::move(qi)), IntPoly(std::move(ri))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    RatPoly g = gcd(RatPoly(a), RatPoly(b));
    if (g.is_zero()) return IntPoly();
    return g.clear_denominators();
}

IntPoly square_free_part(const IntPoly& p) {
    if (p.is_zero()) throw input_error("square-free part of the zero polynomial");
    if (p.degree() == 0) return IntPoly{1};
    IntPoly g = gcd(p, p.derivative());
    RatPoly q = divmod(RatPoly(p), RatPoly(g)).first;
    return q.clear_denominators();
}

// ---------------------------------------------------------------------------
// Reciprocal structure

IntPoly reverse_poly(const IntPoly& p) {
    std::vector<Int> d(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(d));
}

bool is_reciprocal(const IntPoly& p) {
    if (p.is_zero()) return false;
    const auto& c = p.coeffs();
    const size_t n = c.size();
    for (size_t i = 0; i < n; ++i)
        if (c[i] != c[n - 1 - i]) return false;
    return true;
}

IntPoly companion_polynomial(const IntPoly& p_in) {
    IntPoly p = p_in;
    if (p.is_zero()) throw input_error("companion polynomial of the zero polynomial");
    if (!is_reciprocal(p))
        throw input_error("companion polynomial requires a reciprocal polynomial");
    if (p.degree() % 2 != 0) {
        // Odd-degree reciprocal polynomials vanish at -1; remove that factor.
        auto [q, r] = divmod(p, IntPoly{1, 1});
        if (!r.is_zero())
            throw input_error("odd-degree input is not divisible by t+1");
        p = q;
        if (!is_reciprocal(p))
            throw input_error("quotient by t+1 is not reciprocal");
    }
    const int g = p.degree() / 2;
    // z_j(w) = t^j + t^(-j) under w = t + 1/t:  z_0 = 2, z_1 = w,
    // z_{j+1} = w z_j - z_{j-1}.  Then t^(-g) p(t) = a_g + sum a_{g+j} z_j.
    IntPoly zprev{2}, zcur{0, 1};
    IntPoly q = IntPoly::constant(p.coeff(g));
    for (int j = 1; j <= g; ++j) {
        q += zcur * p.coeff(g + j);
        IntPoly znext = IntPoly{0, 1} * zcur - zprev;
        zprev = std::move(zcur);
        zcur = std::move(znext);
    }
    return q;
}

IntPoly expand_companion(const IntPoly& q, bool times_t_plus_one) {
    if (q.is_zero()) return IntPoly();
    const int g = q.degree();
    IntPoly p;
    IntPoly t2p1{1, 0, 1}; // t^2 + 1
    // t^g q(t + 1/t) = sum_j b_j t^(g-j) (t^2+1)^j.
    IntPoly pow{1};
    for (int j = 0; j <= g; ++j) {
        p += IntPoly::monomial(g - j, q.coeff(j)) * pow;
        pow = pow * t2p1;
    }
    if (times_t_plus_one) p = p * IntPoly{1, 1};
    return p;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

int euler_phi(int n) {
    if (n < 1) throw input_error("euler_phi requires n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; static_cast<long>(p) * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPoly cyclotomic(int n) {
    if (n < 1) throw input_error("cyclotomic index must be >= 1");
    static std::map<int, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so the
    // recursion never re-enters the lock.
    for (int k = 1; k <= n; ++k) {
        if (n % k != 0 || cache.count(k)) continue;
        IntPoly num = IntPoly::monomial(k) - IntPoly{1};
        IntPoly den{1};
        for (int d = 1; d < k; ++d)
            if (k % d == 0) den = den * cache.at(d);
        auto [q, r] = divmod(num, den);
        if (!r.is_zero()) throw verification_error("cyclotomic recurrence produced a remainder");
        cache.emplace(k, std::move(q));
    }
    return cache.at(n);
}

std::optional<int> cyclotomic_factor_witness(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) return std::nullopt;
    const int d = p.degree();
    const long bound = 2L * d * d;
    for (long n = 1; n <= bound; ++n) {
        if (euler_phi(static_cast<int>(n)) > d) continue;
        IntPoly phi = cyclotomic(static_cast<int>(n));
        if (divmod(RatPoly(p), RatPoly(phi)).second.is_zero()) return static_cast<int>(n);
    }
    return std::nullopt;
}

} // namespace zzpa
