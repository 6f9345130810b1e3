#include "doctest.h"

#include "zzpa/error.hpp"
#include "zzpa/salem.hpp"

using namespace zzpa;

TEST_CASE("family digit polynomials and their Salem factors") {
    CHECK(family_digit_poly(1) == IntPoly{1, -2, -2, 1});
    CHECK(family_digit_poly(3) == IntPoly{1, -2, 0, 0, 0, 0, -2, 1});
    CHECK(d_poly(1) == IntPoly{1, -3, 1});
    CHECK(d_poly(2) == IntPoly{1, -3, 3, -3, 1});

    // d_g has the alternating closed form 1, -3, 3, -3, ..., 3, -3, 1
    for (int g = 1; g <= 8; ++g) {
        CAPTURE(g);
        IntPoly d = d_poly(g);
        CHECK(d.degree() == 2 * g);
        CHECK(is_reciprocal(d));
        CHECK(d.eval(Int(1)) == -1);
        CHECK(d.eval(Int(-1)) == 6 * g - 1);
        CHECK(family_digit_poly(g) == IntPoly{1, 1} * d);
    }

    CHECK_THROWS_AS(family_digit_poly(0), input_error);
    CHECK_THROWS_AS(d_poly(0), input_error);
}

TEST_CASE("companion polynomials match the tabulated values") {
    CHECK(companion_q(1) == IntPoly{-3, 1});
    CHECK(companion_q(2) == IntPoly{1, -3, 1});
    CHECK(companion_q(3) == IntPoly{3, 0, -3, 1});
    CHECK(companion_q(4) == IntPoly{-1, 6, -1, -3, 1});
    CHECK(companion_q(5) == IntPoly{-3, -1, 9, -2, -3, 1});

    for (int g = 1; g <= 10; ++g) {
        CAPTURE(g);
        CHECK(companion_q(g).degree() == g);
        CHECK(companion_q(g).eval(Int(2)) == -1);
    }
}

TEST_CASE("three-term recurrence and interlacing") {
    for (int g = 2; g <= 8; ++g) {
        CAPTURE(g);
        CHECK(check_recurrence(g));
        CHECK(interlacing_check(g));
    }
    CHECK_THROWS_AS(check_recurrence(1), input_error);
    CHECK_THROWS_AS(interlacing_check(1), input_error);
}

TEST_CASE("genus-1 report is the degenerate quadratic case") {
    SalemReport r = salem_report(1);
    CHECK(r.g == 1);
    CHECK(r.degenerate);
    CHECK(r.is_salem);
    CHECK(r.unit_circle_roots == 0);
    CHECK(r.q_at_2 == -1);
    CHECK(r.roots_in_critical_interval == 0);
    CHECK(r.roots_above_two == 1);
    CHECK(r.lambda.decimal(12) == "2.618033988750");
    CHECK(r.d == IntPoly{1, -3, 1});
    CHECK(r.singularities.one_prongs == 4);
    CHECK(r.geometry_ok);

    CHECK_THROWS_AS(salem_report(0), input_error);
}

TEST_CASE("full reports for genus 2 through 5") {
    const char* decimals[] = {"2.153721375542", "2.042490533941",
                              "2.011287151436", "2.002893211434"};
    for (int g = 2; g <= 5; ++g) {
        CAPTURE(g);
        SalemReport r = salem_report(g);
        CHECK(r.g == g);
        CHECK(!r.degenerate);
        CHECK(r.is_salem);
        CHECK(r.cross_check_vs_classify);
        CHECK(r.reciprocal);
        CHECK(r.recurrence_ok);
        CHECK(r.q_at_2 == -1);
        CHECK(r.sign_q_at_minus2);
        CHECK(r.roots_in_critical_interval == g - 1);
        CHECK(r.roots_above_two == 1);
        CHECK(r.q_totally_real);
        CHECK(r.interlaces_previous);
        CHECK(r.cyclotomic_free);
        CHECK(r.unit_circle_roots == 2 * (g - 1));
        CHECK(r.d_real_roots_ok);
        CHECK(r.geometry_ok);
        CHECK(r.d.degree() == 2 * g);
        CHECK(r.D == family_digit_poly(g));
        CHECK(r.q == companion_q(g));
        CHECK(r.lambda.decimal(12) == decimals[g - 2]);
        CHECK(r.singularities.one_prongs == 2 * g + 2);
        CHECK(r.singularities.infinity_prongs == 2 * g);
        REQUIRE(r.singularities.double_cover_genus.has_value());
        CHECK(*r.singularities.double_cover_genus == g);
        CHECK(r.singularities.trace_field_degree == g);
    }
}

TEST_CASE("growth rates decrease toward 2") {
    AlgebraicReal prev = salem_report(1).lambda;
    for (int g = 2; g <= 6; ++g) {
        CAPTURE(g);
        AlgebraicReal cur = perron_root(d_poly(g));
        CHECK(cur.compare(prev) < 0);
        CHECK(cur.compare(Rat(2)) > 0);
        prev = cur;
    }
}
