#include "doctest.h"

#include <cmath>

#include "zzpa/algebraic.hpp"
#include "zzpa/error.hpp"

using namespace zzpa;

TEST_CASE("sturm counting") {
    IntPoly p{-2, 0, 1};  // t^2 - 2
    CHECK(sturm_count(p, Rat(0), Rat(2)) == 1);
    CHECK(sturm_count(p, Rat(-2), Rat(2)) == 2);
    CHECK(sturm_count(p, Rat(2), Rat(3)) == 0);
    CHECK(sturm_count(RatPoly{-2, 0, 1}, Rat(0), Rat(2)) == 1);
    // vanishing at an endpoint is rejected, not miscounted
    CHECK_THROWS_AS(sturm_count(IntPoly{-1, 0, 1}, Rat(-1), Rat(0)),
                    input_error);
}

TEST_CASE("isolation certificates are validated") {
    IntPoly d{1, -3, 1};
    // (0, 3) holds both roots, (1, 2) holds neither
    CHECK_THROWS_AS(AlgebraicReal(d, Rat(0), Rat(3)), input_error);
    CHECK_THROWS_AS(AlgebraicReal(d, Rat(1), Rat(2)), input_error);
    AlgebraicReal ok(d, Rat(2), Rat(3));
    CHECK(ok.lo() == 2);
    CHECK(ok.hi() == 3);
}

TEST_CASE("perron root of the trace-golden polynomial") {
    AlgebraicReal lam = perron_root(IntPoly{1, -3, 1});
    CHECK(lam.decimal(12) == "2.618033988750");
    CHECK(lam.decimal(1) == "2.6");
    CHECK(lam.decimal(0) == "3");
    CHECK(lam.floor() == 2);
    CHECK(!lam.is_integer());
    CHECK(std::abs(lam.approx() - (3.0 + std::sqrt(5.0)) / 2.0) < 1e-12);
    CHECK(vanishes_at(lam, IntPoly{1, -2, -2, 1}));
    CHECK(!vanishes_at(lam, IntPoly{-2, 0, 1}));

    CHECK_THROWS_AS(perron_root(IntPoly{1, 0, 1}), input_error);
    CHECK_THROWS_AS(perron_root(IntPoly{-1, 2}), input_error);
    CHECK_THROWS_AS(perron_root(IntPoly{-1, 1}), input_error);
}

TEST_CASE("comparisons and refinement") {
    AlgebraicReal sqrt2(IntPoly{-2, 0, 1}, Rat(1), Rat(2));
    CHECK(sqrt2.compare(Rat(3, 2)) < 0);
    CHECK(sqrt2.compare(Rat(1)) > 0);
    CHECK(sqrt2.floor() == 1);

    AlgebraicReal lam = perron_root(IntPoly{1, -3, 1});
    CHECK(lam.compare(sqrt2) > 0);
    CHECK(sqrt2.compare(lam) < 0);

    // equal numbers with different certificates, even different definings
    AlgebraicReal sqrt2b(IntPoly{-2, 0, 1}, Rat(5, 4), Rat(3, 2));
    CHECK(sqrt2.compare(sqrt2b) == 0);
    AlgebraicReal sqrt2c(IntPoly{6, -2, -3, 1}, Rat(1), Rat(2));
    CHECK(sqrt2.compare(sqrt2c) == 0);

    AlgebraicReal fine = sqrt2.refined(4);
    CHECK(fine.width() * 16 <= sqrt2.width());
    CHECK(fine.compare(sqrt2) == 0);
    AlgebraicReal finer = sqrt2.refined_below_width(Rat(1, 1000));
    CHECK(finer.width() < Rat(1, 1000));
    CHECK(finer.compare(sqrt2) == 0);
}

TEST_CASE("rational embeddings") {
    AlgebraicReal half = AlgebraicReal::from_rational(Rat(1, 2));
    CHECK(half.is_integer() == false);
    CHECK(half.compare(Rat(1, 2)) == 0);
    CHECK(half.floor() == 0);

    AlgebraicReal two = AlgebraicReal::from_rational(Rat(6, 3));
    CHECK(two.is_integer());
    CHECK(two.floor() == 2);

    CHECK(AlgebraicReal::from_rational(Rat(7, 2)).floor() == 3);
    CHECK(AlgebraicReal::from_rational(Rat(-5, 2)).floor() == -3);
}

TEST_CASE("decimal rendering rounds half to even") {
    auto dec = [](const Rat& r, int places) {
        return AlgebraicReal::from_rational(r).decimal(places);
    };
    CHECK(dec(Rat(1, 4), 1) == "0.2");
    CHECK(dec(Rat(3, 4), 1) == "0.8");
    CHECK(dec(Rat(1, 8), 2) == "0.12");
    CHECK(dec(Rat(3, 8), 2) == "0.38");
    CHECK(dec(Rat(-1, 4), 1) == "-0.2");
    CHECK(dec(Rat(1, 3), 4) == "0.3333");
    CHECK(dec(Rat(2, 3), 4) == "0.6667");
    CHECK(dec(Rat(5), 0) == "5");
    CHECK(dec(Rat(0), 3) == "0.000");

    CHECK(format_scaled_integer(Int(1234), 2) == "12.34");
    CHECK(format_scaled_integer(Int(-3), 2) == "-0.03");
    CHECK(format_scaled_integer(Int(50), 3) == "0.050");
    CHECK(format_scaled_integer(Int(7), 0) == "7");
}

TEST_CASE("real root isolation") {
    // (t^2 - 2)(t - 1)
    IntPoly p{2, -2, -1, 1};
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].compare(roots[1]) < 0);
    CHECK(roots[1].compare(roots[2]) < 0);
    CHECK(roots[0].decimal(4) == "-1.4142");
    CHECK(roots[1].compare(Rat(1)) == 0);
    CHECK(roots[2].decimal(6) == "1.414214");

    // repeated roots are reported once with a square-free defining
    IntPoly rep{-3, 7, -5, 1};  // (t-1)^2 (t-3)
    auto rr = isolate_real_roots(rep);
    REQUIRE(rr.size() == 2);
    CHECK(rr[0].compare(Rat(1)) == 0);
    CHECK(rr[1].compare(Rat(3)) == 0);
    CHECK(rr[0].defining() == IntPoly{3, -4, 1});

    CHECK(isolate_real_roots(IntPoly{5}).empty());
    // no real roots at all
    CHECK(isolate_real_roots(IntPoly{1, 0, 1}).empty());
}

TEST_CASE("bounds and rational helpers") {
    CHECK(cauchy_bound(IntPoly{1, -3, 1}) == Rat(4));
    CHECK(cauchy_bound(IntPoly{-1, -2, 1}) == Rat(3));
    CHECK(cauchy_bound(IntPoly{2, 0, 4}) == Rat(3, 2));

    CHECK(pow10(3) == 1000);
    CHECK(rat_floor(Rat(-7, 2)) == Rat(-4));
    CHECK(rat_floor_int(Rat(7, 2)) == 3);
    CHECK(rat_floor_int(Rat(-1, 3)) == -1);
}
