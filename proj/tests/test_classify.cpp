#include "doctest.h"

#include <numeric>
#include <tuple>
#include <variant>
#include <vector>

#include "zzpa/classify.hpp"
#include "zzpa/error.hpp"

using namespace zzpa;

namespace {

// t^n + 1 - sum c_i t^{n-i} for interior digits c_1, ..., c_{n-1}
IntPoly poly_from_digits(int n, const std::vector<int>& c) {
    std::vector<Int> v(n + 1, 0);
    v[n] = 1;
    v[0] = 1;
    for (int i = 1; i <= n - 1; ++i) v[n - i] = -Int(c[i - 1]);
    return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("permutation helpers") {
    Permutation p = make_permutation(1, {2, 3, 1});
    CHECK(p.size() == 3);
    CHECK(p.of(1) == 2);
    CHECK(p.of(3) == 1);
    CHECK(p.is_full_cycle());
    Permutation q = p.inverse();
    CHECK(q.of(2) == 1);
    CHECK(q.of(1) == 3);

    Permutation fixed = make_permutation(0, {0, 2, 1});
    CHECK(!fixed.is_full_cycle());

    CHECK_THROWS_AS(make_permutation(1, {1, 1}), input_error);
    CHECK_THROWS_AS(make_permutation(1, {1, 3}), input_error);
}

TEST_CASE("orbit permutation families") {
    Permutation r = rho_family(4, 4, 3);
    CHECK(r.base == 1);
    CHECK(r.image == std::vector<int>{4, 3, 1, 2});

    Permutation o = rho_family(3, 4, 2);
    CHECK(o.base == 0);
    CHECK(o.image == std::vector<int>{4, 0, 1, 2, 3});

    Permutation b = rho_family(2, 3, 2);
    CHECK(b.base == 1);
    CHECK(b.image == std::vector<int>{3, 1, 2});

    CHECK(r.is_full_cycle());
    CHECK(o.is_full_cycle());
    CHECK(b.is_full_cycle());

    // the bimodal conjugation moves the pivot
    Permutation s = rho_family(2, 5, 4);
    CHECK(s.of(4) == 3);
    CHECK(s.of(3) == 5);

    CHECK_THROWS_AS(rho_family(1, 4, 2), input_error);
    CHECK_THROWS_AS(rho_family(4, 2, 2), input_error);
    CHECK_THROWS_AS(rho_family(4, 4, 1), input_error);
    CHECK_THROWS_AS(rho_family(4, 4, 4), input_error);
}

TEST_CASE("fraction labels") {
    FractionLabel h = FractionLabel::parse("1/2");
    CHECK(h.a == 1);
    CHECK(h.b == 2);
    CHECK(h.n() == 3);
    CHECK(h.k() == 2);
    CHECK(h.to_string() == "1/2");

    FractionLabel q = FractionLabel::parse("4/13");
    CHECK(q.n() == 14);
    CHECK(q.k() == 10);

    CHECK_THROWS_AS(FractionLabel(Int(2), Int(2)), input_error);
    CHECK_THROWS_AS(FractionLabel(Int(0), Int(3)), input_error);
    CHECK_THROWS_AS(FractionLabel(Int(3), Int(2)), input_error);
    CHECK_THROWS_AS(FractionLabel(Int(2), Int(4)), input_error);
    CHECK_THROWS_AS(FractionLabel::parse("x"), input_error);
    CHECK_THROWS_AS(FractionLabel::parse("1/"), input_error);
    CHECK_THROWS_AS(FractionLabel::parse("/2"), input_error);
}

TEST_CASE("closed-form digit polynomials match the known displays") {
    CHECK(digit_poly_from_fraction(2, FractionLabel(1, 2)) ==
          IntPoly{1, -2, -2, 1});
    CHECK(digit_poly_from_fraction(2, FractionLabel(1, 7)) ==
          poly_from_digits(8, {2, 0, 0, 0, 0, 0, 2}));
    CHECK(digit_poly_from_fraction(2, FractionLabel(6, 7)) ==
          poly_from_digits(8, {2, 2, 2, 2, 2, 2, 2}));
    CHECK(digit_poly_from_fraction(7, FractionLabel(4, 13)) ==
          poly_from_digits(14, {7, 5, 5, 7, 5, 5, 7, 5, 5, 7, 5, 5, 7}));
    CHECK(digit_poly_from_fraction(7, FractionLabel(9, 13)) ==
          poly_from_digits(14, {7, 7, 7, 5, 7, 7, 5, 7, 7, 5, 7, 7, 7}));
}

TEST_CASE("verified family builds with invariant roundtrip") {
    for (auto [m, a, b] : {std::tuple{2, 1, 2}, {3, 2, 3}, {4, 1, 3},
                           {2, 1, 7}, {2, 6, 7}, {7, 4, 13}, {7, 9, 13},
                           {5, 3, 8}, {6, 5, 11}}) {
        CAPTURE(m);
        CAPTURE(a);
        CAPTURE(b);
        FractionLabel label(a, b);
        BuiltMap built = build_zigzag(m, label);
        Permutation rho = rho_family(m, label.n(), label.k());
        CHECK(built.map.standard());
        CHECK(built.map.m() == m);
        // odd m gives a negative map, whose orbit picks up 0 as an extra point
        CHECK(built.orbit.period == b + 1 + (m % 2));
        CHECK(built.orbit.period == rho.size());
        CHECK(built.closed_form == digit_poly_from_fraction(m, label));
        CHECK(is_reciprocal(built.closed_form));
        CHECK(phi(built.orbit) == label);
        CHECK(built.orbit.perm == rho.image);
        CHECK(built.orbit.taxonomy ==
              expected_taxonomy(m, label.n(), label.k()));
    }

    CHECK_THROWS_AS(build_zigzag(1, FractionLabel(1, 2)), input_error);
}

TEST_CASE("nonstandard quadratic maps") {
    for (int m = 2; m <= 6; ++m) {
        CAPTURE(m);
        QuadMap qm = quad_nonstandard(m);
        CHECK(qm.defining == IntPoly{1, -(m + 1), 1});
        CHECK(qm.map.context()->minpoly() == IntPoly{1, -(m + 1), 1});
        CHECK(!qm.map.standard());
        CHECK(qm.orbit.period == (m % 2 == 0 ? 3 : 2));
        if (m % 2 == 0) {
            // 1 -> 1/lambda -> 0 -> 1
            CHECK(qm.orbit.label_base == 0);
            CHECK(qm.orbit.points[0].is_zero());
            CHECK(qm.orbit.points[1] == qm.map.lambda_inv());
        } else {
            // 1 -> 1/lambda -> 1
            CHECK(qm.orbit.label_base == 1);
            CHECK(qm.orbit.points[0] == qm.map.lambda_inv());
        }
    }
    CHECK_THROWS_AS(quad_nonstandard(1), input_error);
}

TEST_CASE("phi rejects orbits outside the families") {
    // the silver-ratio map has a period-2 orbit, too short for any family
    ZigZagMap f =
        ZigZagMap::make(2, +1, AlgebraicReal(IntPoly{-1, -2, 1}, Rat(2), Rat(3)));
    auto walked = orbit_of_one(f);
    REQUIRE(std::holds_alternative<PostcriticalData>(walked));
    CHECK_THROWS_AS(phi(std::get<PostcriticalData>(walked)), input_error);
}

TEST_CASE("full-cycle criterion against brute force") {
    for (int n = 3; n <= 24; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            bool expect = rho_family(4, n, k).is_full_cycle();
            CHECK(is_full_cycle(n, k) == expect);
            // the two gcd forms of the criterion agree
            CHECK((std::gcd(n - k, n - 1) == 1) ==
                  (std::gcd(n - k, k - 1) == 1));
        }
    }
}
