#include "zzpa/classify.hpp"

#include <numeric>
#include <utility>
#include <variant>

#include "zzpa/error.hpp"

namespace zzpa {

namespace {

Permutation rho_even(int n, int k) {
    std::vector<int> image(n);
    image[0] = n;
    for (int i = 2; i <= k - 1; ++i) image[i - 1] = i + (n - k);
    for (int i = k; i <= n; ++i) image[i - 1] = i - (k - 1);
    return make_permutation(1, std::move(image));
}

Permutation rho_odd(int n, int k) {
    std::vector<int> image(n + 1);
    image[0] = n;
    image[1] = 0;
    for (int i = 2; i <= k - 1; ++i) image[i] = i + (n - k);
    for (int i = k; i <= n; ++i) image[i] = i - (k - 1);
    return make_permutation(0, std::move(image));
}

Permutation rho_bimodal(int n, int k) {
    // tau cycles 1 -> 2 -> ... -> k-1 -> 1 and fixes k..n.
    auto tau = [k](int x) { return x < k - 1 ? x + 1 : (x == k - 1 ? 1 : x); };
    auto tau_inv = [k](int x) { return x > 1 && x <= k - 1 ? x - 1 : (x == 1 ? k - 1 : x); };
    Permutation e = rho_even(n, k);
    std::vector<int> image(n);
    for (int i = 1; i <= n; ++i) image[i - 1] = tau_inv(e.of(tau(i)));
    return make_permutation(1, std::move(image));
}

int find_label_with_image(const PostcriticalData& orbit, int target) {
    for (std::size_t i = 0; i < orbit.perm.size(); ++i)
        if (orbit.perm[i] == target)
            return orbit.label_base + static_cast<int>(i);
    return -1;
}

FractionLabel reduced_phi(int n, int k) {
    Int a = n - k, b = n - 1;
    Int g = gcd(a, b);
    return FractionLabel(a / g, b / g);
}

void check(bool ok, const char* what) {
    if (!ok) throw verification_error(std::string("build_zigzag: ") + what);
}

}  // namespace

int Permutation::of(int label) const {
    int idx = label - base;
    if (idx < 0 || idx >= size()) throw input_error("label out of range");
    return image[idx];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image.size());
    for (int i = 0; i < size(); ++i) inv[image[i] - base] = base + i;
    return {base, std::move(inv)};
}

bool Permutation::is_full_cycle() const {
    if (image.empty()) return false;
    int steps = 0, label = base;
    do {
        label = of(label);
        ++steps;
    } while (label != base && steps <= size());
    return steps == size();
}

Permutation make_permutation(int base, std::vector<int> image) {
    int n = static_cast<int>(image.size());
    std::vector<char> hit(n, 0);
    for (int v : image) {
        int idx = v - base;
        if (idx < 0 || idx >= n || hit[idx])
            throw input_error("not a permutation of the label range");
        hit[idx] = 1;
    }
    return {base, std::move(image)};
}

Permutation rho_family(int m, int n, int k) {
    if (m < 2) throw input_error("rho family needs m >= 2");
    if (n < 3 || k < 2 || k > n - 1)
        throw input_error("rho family needs n >= 3 and 2 <= k <= n-1");
    if (m == 2) return rho_bimodal(n, k);
    if (m % 2 == 0) return rho_even(n, k);
    return rho_odd(n, k);
}

bool is_full_cycle(int n, int k) {
    if (n < 3 || k < 2 || k > n - 1)
        throw input_error("need n >= 3 and 2 <= k <= n-1");
    return std::gcd(n - k, n - 1) == 1;
}

FractionLabel::FractionLabel(Int a_in, Int b_in) : a(std::move(a_in)), b(std::move(b_in)) {
    if (a <= 0 || b <= a)
        throw input_error("fraction must satisfy 0 < a < b");
    if (gcd(a, b) != 1) throw input_error("fraction must be in lowest terms");
}

FractionLabel FractionLabel::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw input_error("expected a fraction of the form a/b");
    Int a, b;
    try {
        a = Int(text.substr(0, slash));
        b = Int(text.substr(slash + 1));
    } catch (const std::invalid_argument&) {
        throw input_error("expected a fraction of the form a/b");
    }
    return FractionLabel(a, b);
}

int FractionLabel::n() const {
    if (b > 1 << 24) throw input_error("denominator too large");
    return static_cast<int>(b.get_si()) + 1;
}

int FractionLabel::k() const { return n() - static_cast<int>(a.get_si()); }

std::string FractionLabel::to_string() const {
    return a.get_str() + "/" + b.get_str();
}

IntPoly digit_poly_from_fraction(int m, const FractionLabel& q) {
    if (m < 2) throw input_error("digit polynomial closed form needs m >= 2");
    int n = q.n();
    std::vector<Int> coeffs(n + 1, 0);
    coeffs[n] = 1;
    coeffs[0] = 1;
    for (int i = 1; i <= n - 1; ++i) {
        // c_i = m exactly when some integer j satisfies (i-1) a <= j b <= i a.
        Int lo = (Int(i - 1) * q.a + q.b - 1) / q.b;  // ceil((i-1)a / b)
        bool hits = lo * q.b <= Int(i) * q.a;
        coeffs[n - i] = hits ? -Int(m) : -Int(m - 2);
    }
    return IntPoly(std::move(coeffs));
}

std::vector<PointTag> expected_taxonomy(int m, int n, int k) {
    if (m < 2 || n < 3 || k < 2 || k > n - 1)
        throw input_error("need m >= 2, n >= 3 and 2 <= k <= n-1");
    std::vector<PointTag> tags;
    if (m % 2 == 1) {
        tags.assign(n + 1, PointTag::Pm);
        tags[0] = PointTag::E;
        tags[1] = PointTag::C;
        for (int i = 2; i <= k - 1; ++i) tags[i] = PointTag::Pm2;
        tags[k] = PointTag::R;
        tags[n] = PointTag::E;
    } else if (m >= 4) {
        tags.assign(n, PointTag::Pm);
        tags[0] = PointTag::C;
        for (int i = 2; i <= k - 1; ++i) tags[i - 1] = PointTag::Pm2;
        tags[k - 1] = PointTag::R;
        tags[n - 1] = PointTag::E;
    } else {
        tags.assign(n, PointTag::Pm);
        for (int i = 1; i <= k - 2; ++i) tags[i - 1] = PointTag::Pm2;
        tags[k - 2] = PointTag::C;
        tags[k - 1] = PointTag::R;
        tags[n - 1] = PointTag::E;
    }
    return tags;
}

BuiltMap build_zigzag(int m, const FractionLabel& q) {
    if (m < 2) throw input_error("build_zigzag needs m >= 2");
    IntPoly closed = digit_poly_from_fraction(m, q);
    AlgebraicReal lambda = perron_root(closed);
    check(lambda.compare(Rat(m)) > 0 && lambda.compare(Rat(m + 1)) < 0,
          "growth rate is not in (m, m+1)");
    int sign = m % 2 == 0 ? +1 : -1;
    ZigZagMap map = ZigZagMap::make(m, sign, lambda);

    auto walked = orbit_of_one(map);
    check(std::holds_alternative<PostcriticalData>(walked),
          "orbit of 1 is not periodic");
    PostcriticalData orbit = std::get<PostcriticalData>(std::move(walked));

    int n = q.n(), k = q.k();
    check(orbit.label_base == (m % 2 == 1 ? 0 : 1), "orbit label base mismatch");
    check(orbit.period == (m % 2 == 1 ? n + 1 : n), "orbit period mismatch");
    Permutation expected = rho_family(m, n, k);
    check(orbit.perm == expected.image, "orbit permutation mismatch");
    check(orbit.taxonomy == expected_taxonomy(m, n, k), "orbit taxonomy mismatch");

    IntPoly walked_poly = digit_polynomial(map);
    check(walked_poly == closed, "digit polynomial differs from the closed form");
    check(is_reciprocal(closed), "digit polynomial is not reciprocal");

    FractionLabel back = phi(orbit);
    check(back == q, "phi does not invert the build");

    return {std::move(map), std::move(orbit), q, std::move(closed)};
}

FractionLabel phi(const PostcriticalData& orbit) {
    int p = orbit.period;
    if (orbit.label_base == 0) {
        int n = p - 1;
        if (n < 3) throw input_error("not in PA(m): cycle too short");
        int k = find_label_with_image(orbit, 1);
        if (k >= 2 && k <= n - 1 && orbit.perm == rho_family(3, n, k).image)
            return reduced_phi(n, k);
        throw input_error("not in PA(m): orbit permutation is outside the family");
    }
    int n = p;
    if (n < 3) throw input_error("not in PA(m): cycle too short");
    int k_even = find_label_with_image(orbit, 1);
    if (k_even >= 2 && k_even <= n - 1 &&
        orbit.perm == rho_family(4, n, k_even).image)
        return reduced_phi(n, k_even);
    int k_bimodal = find_label_with_image(orbit, n) + 1;
    if (k_bimodal >= 2 && k_bimodal <= n - 1 &&
        orbit.perm == rho_family(2, n, k_bimodal).image)
        return reduced_phi(n, k_bimodal);
    throw input_error("not in PA(m): orbit permutation is outside the family");
}

QuadMap quad_nonstandard(int m) {
    if (m < 2) throw input_error("quad_nonstandard needs m >= 2");
    IntPoly defining({1, -(m + 1), 1});
    AlgebraicReal lambda = perron_root(defining);
    int sign = m % 2 == 0 ? -1 : +1;
    ZigZagMap map = ZigZagMap::make(m, sign, lambda);

    auto walked = orbit_of_one(map);
    if (!std::holds_alternative<PostcriticalData>(walked))
        throw verification_error("quad_nonstandard: orbit of 1 is not periodic");
    PostcriticalData orbit = std::get<PostcriticalData>(std::move(walked));

    auto fail = [](const char* what) {
        throw verification_error(std::string("quad_nonstandard: ") + what);
    };
    if (m % 2 == 1) {
        if (orbit.period != 2 || orbit.label_base != 1) fail("expected the cycle 1 -> 1/lambda -> 1");
        if (orbit.points[0] != map.critical_point(1)) fail("1 does not land on c_1");
        if (orbit.perm != std::vector<int>{2, 1}) fail("orbit permutation mismatch");
    } else {
        if (orbit.period != 3 || orbit.label_base != 0) fail("expected the cycle 1 -> 1/lambda -> 0 -> 1");
        if (orbit.points[1] != map.critical_point(1)) fail("1 does not land on c_1");
        if (orbit.perm != std::vector<int>{2, 0, 1}) fail("orbit permutation mismatch");
    }
    if (!(map.context()->minpoly() == defining))
        fail("growth rate is not quadratic of trace m+1");

    return {std::move(map), std::move(orbit), std::move(defining)};
}

}  // namespace zzpa
