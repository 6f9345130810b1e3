#include "doctest.h"

#include "zzpa/error.hpp"
#include "zzpa/poly.hpp"

using namespace zzpa;

namespace {

// (t+1)(t^2 - 3t + 1), the degree-3 reciprocal workhorse used throughout.
const IntPoly kD1{1, -2, -2, 1};
const IntPoly kd1{1, -3, 1};

}  // namespace

TEST_CASE("integer polynomial basics") {
    IntPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.content() == 0);
    CHECK(zero.to_string() == "0");

    CHECK(kD1.degree() == 3);
    CHECK(kD1.coeff(0) == 1);
    CHECK(kD1.coeff(2) == -2);
    CHECK(kD1.coeff(9) == 0);
    CHECK(kD1.leading() == 1);
    CHECK(kD1.is_monic());
    CHECK(kD1.to_string() == "t^3 - 2*t^2 - 2*t + 1");
    CHECK(kD1.to_string("w") == "w^3 - 2*w^2 - 2*w + 1");

    // trailing zeros trim away
    IntPoly trimmed(std::vector<Int>{Int(1), Int(2), Int(0), Int(0)});
    CHECK(trimmed.degree() == 1);

    CHECK(IntPoly::monomial(3, 2) == IntPoly{0, 0, 0, 2});
    CHECK(IntPoly::constant(Int(-5)) == IntPoly{-5});
}

TEST_CASE("integer polynomial arithmetic and evaluation") {
    IntPoly tm1{-1, 1}, tp1{1, 1};
    CHECK(tm1 * tp1 == IntPoly{-1, 0, 1});
    CHECK(tm1 + tp1 == IntPoly{0, 2});
    CHECK(tm1 - tm1 == IntPoly());
    CHECK(-tm1 == IntPoly{1, -1});
    CHECK(tp1 * Int(3) == IntPoly{3, 3});

    CHECK(kD1.eval(Int(2)) == -3);
    CHECK(kD1.eval(Int(0)) == 1);
    CHECK(kD1.eval(Rat(1, 2)) == Rat(-3, 8));
    CHECK(kD1.derivative() == IntPoly{-2, -4, 3});

    IntPoly scaled{2, 4, 6};
    CHECK(scaled.content() == 2);
    CHECK(scaled.primitive_part() == IntPoly{1, 2, 3});
    // primitive part flips to a positive leading coefficient
    CHECK(IntPoly{-2, -4}.primitive_part() == IntPoly{1, 2});
}

TEST_CASE("rational polynomial basics") {
    RatPoly p(kD1);
    CHECK(p.degree() == 3);
    CHECK(p.eval(Rat(1, 2)) == Rat(-3, 8));

    RatPoly q(std::vector<Rat>{Rat(2), Rat(4)});
    CHECK(q.monic() == RatPoly(std::vector<Rat>{Rat(1, 2), Rat(1)}));

    RatPoly halves(std::vector<Rat>{Rat(1, 2), Rat(1), Rat(3, 2)});
    CHECK(halves.clear_denominators() == IntPoly{1, 2, 3});
    // the cleared polynomial is primitive even when the input had content
    RatPoly bulky(std::vector<Rat>{Rat(2), Rat(4)});
    CHECK(bulky.clear_denominators() == IntPoly{1, 2});
}

TEST_CASE("euclidean division") {
    auto [q, r] = divmod(kD1, IntPoly{1, 1});
    CHECK(q == kd1);
    CHECK(r.is_zero());

    auto [q2, r2] = divmod(IntPoly{0, 0, 1}, IntPoly{0, 1});
    CHECK(q2 == IntPoly{0, 1});
    CHECK(r2.is_zero());

    auto [q3, r3] = divmod(IntPoly{1, 1, 1}, IntPoly{-1, 1});
    CHECK(q3 == IntPoly{2, 1});
    CHECK(r3 == IntPoly{3});

    // non-integral quotients are rejected over Z but fine over Q
    CHECK_THROWS_AS(divmod(IntPoly{1, 1, 1}, IntPoly{2}), input_error);
    auto [q4, r4] = divmod(RatPoly{1, 1, 1}, RatPoly{2});
    CHECK(q4 == RatPoly(std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
    CHECK(r4.is_zero());

    CHECK_THROWS_AS(divmod(kD1, IntPoly()), input_error);
}

TEST_CASE("gcd and square-free part") {
    // (t-1)(t+2) and (t-1)(t+3)
    CHECK(gcd(IntPoly{-2, 1, 1}, IntPoly{-3, 2, 1}) == IntPoly{-1, 1});
    CHECK(gcd(RatPoly{-1, 0, 1}, RatPoly{1, -2, 1}) ==
          RatPoly(std::vector<Rat>{Rat(-1), Rat(1)}));
    // coprime inputs give a constant (degree 0) gcd
    CHECK(gcd(kd1, IntPoly{-2, 0, 1}).degree() == 0);

    // (t-1)^2 (t+2) loses the repeated factor
    CHECK(square_free_part(IntPoly{2, -3, 0, 1}) == IntPoly{-2, 1, 1});
    CHECK(square_free_part(kD1) == kD1);
}

TEST_CASE("reversal and reciprocity") {
    CHECK(reverse_poly(IntPoly{2, 0, 1}) == IntPoly{1, 0, 2});
    CHECK(reverse_poly(kD1) == kD1);
    CHECK(is_reciprocal(kD1));
    CHECK(is_reciprocal(kd1));
    CHECK(!is_reciprocal(IntPoly{-1, -1, 1}));
    CHECK(!is_reciprocal(IntPoly{1, 0, -2, 1}));
}

TEST_CASE("companion polynomial and its inverse") {
    // d(t) = t^2 - 3t + 1 = t * q(t + 1/t) with q(w) = w - 3
    CHECK(companion_polynomial(kd1) == IntPoly{-3, 1});
    // odd-degree reciprocal input sheds its forced (t+1) factor first
    CHECK(companion_polynomial(kD1) == IntPoly{-3, 1});

    CHECK(expand_companion(IntPoly{-3, 1}, false) == kd1);
    CHECK(expand_companion(IntPoly{-3, 1}, true) == kD1);

    // q_2(w) = w^2 - 3w + 1 expands to t^4 - 3t^3 + 3t^2 - 3t + 1
    IntPoly q2{1, -3, 1};
    IntPoly d2{1, -3, 3, -3, 1};
    CHECK(expand_companion(q2, false) == d2);
    CHECK(companion_polynomial(d2) == q2);
    CHECK(companion_polynomial(expand_companion(q2, true)) == q2);

    CHECK_THROWS_AS(companion_polynomial(IntPoly{-1, -1, 1}), input_error);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(3) == IntPoly{1, 1, 1});
    CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});

    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(105) == 48);

    // the first index with a coefficient outside {-1, 0, 1}
    IntPoly c105 = cyclotomic(105);
    CHECK(c105.degree() == 48);
    CHECK(c105.coeff(7) == -2);
}

TEST_CASE("cyclotomic factor witness") {
    auto w = cyclotomic_factor_witness(kD1);
    REQUIRE(w.has_value());
    CHECK(*w == 2);

    auto w1 = cyclotomic_factor_witness(IntPoly{-1, 4, -4, 1});
    REQUIRE(w1.has_value());
    CHECK(*w1 == 1);

    auto w12 = cyclotomic_factor_witness(IntPoly{1, 0, -1, 0, 1});
    REQUIRE(w12.has_value());
    CHECK(*w12 == 12);

    CHECK(!cyclotomic_factor_witness(kd1).has_value());
    CHECK(!cyclotomic_factor_witness(IntPoly{1, -3, 3, -3, 1}).has_value());
}
