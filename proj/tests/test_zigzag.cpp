#include "doctest.h"

#include <cmath>
#include <variant>
#include <vector>

#include "zzpa/error.hpp"
#include "zzpa/zigzag.hpp"

using namespace zzpa;

namespace {

ZigZagMap trace_golden_map() {
    return ZigZagMap::make(2, +1, perron_root(IntPoly{1, -3, 1}));
}

std::vector<std::vector<Int>> int_matrix(
    std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Int>> M;
    for (auto& row : rows) {
        M.emplace_back();
        for (long v : row) M.back().emplace_back(v);
    }
    return M;
}

}  // namespace

TEST_CASE("map construction validates its inputs") {
    AlgebraicReal lam = perron_root(IntPoly{1, -3, 1});
    CHECK_THROWS_AS(ZigZagMap::make(0, +1, lam), input_error);
    CHECK_THROWS_AS(ZigZagMap::make(2, 0, lam), input_error);
    CHECK_THROWS_AS(ZigZagMap::make(2, 2, lam), input_error);
    // lambda must lie strictly between m and m+1
    CHECK_THROWS_AS(ZigZagMap::make(3, +1, lam), input_error);
    CHECK_THROWS_AS(
        ZigZagMap::make(2, +1, AlgebraicReal::from_rational(Rat(7, 2))),
        input_error);
    CHECK_THROWS_AS(
        ZigZagMap::make(2, +1, AlgebraicReal::from_rational(Rat(2))),
        input_error);
}

TEST_CASE("branch layout and continuity") {
    ZigZagMap f = trace_golden_map();
    CHECK(f.m() == 2);
    CHECK(f.sign() == +1);
    CHECK(f.standard());
    CHECK(f.default_orbit_cap() >= 32);

    REQUIRE(f.branches().size() == 3);
    CHECK(f.branches()[0].rising);
    CHECK(f.branches()[0].c == 0);
    CHECK(!f.branches()[1].rising);
    CHECK(f.branches()[1].c == 2);
    CHECK(f.branches()[2].rising);
    CHECK(f.branches()[2].c == 2);

    auto ctx = f.context();
    FieldElement zero = FieldElement::zero(ctx);
    FieldElement one = FieldElement::one(ctx);
    const FieldElement& c1 = f.critical_point(1);
    const FieldElement& c2 = f.critical_point(2);
    CHECK(c1 == f.lambda_inv());
    CHECK(c2 == f.lambda_inv() + f.lambda_inv());
    CHECK_THROWS_AS(f.critical_point(0), input_error);
    CHECK_THROWS_AS(f.critical_point(3), input_error);

    CHECK(f.branch_index(zero) == 0);
    CHECK(f.branch_index(c1) == 1);
    CHECK(f.branch_index(c2) == 2);
    CHECK(f.branch_index(one) == 2);

    // adjacent branches agree at the shared critical point, and the
    // critical values land exactly on the boundary
    CHECK(f.apply_branch(0, c1) == f.apply_branch(1, c1));
    CHECK(f.apply_branch(1, c2) == f.apply_branch(2, c2));
    CHECK(f.evaluate(c1) == one);
    CHECK(f.evaluate(c2) == zero);
    CHECK(f.evaluate(zero) == zero);
}

TEST_CASE("period-3 orbit of the trace-golden map") {
    ZigZagMap f = trace_golden_map();
    auto walked = orbit_of_one(f);
    REQUIRE(std::holds_alternative<PostcriticalData>(walked));
    const PostcriticalData& o = std::get<PostcriticalData>(walked);

    CHECK(o.label_base == 1);
    CHECK(o.period == 3);
    CHECK(o.perm == std::vector<int>{3, 1, 2});
    CHECK(o.taxonomy ==
          std::vector<PointTag>{PointTag::C, PointTag::R, PointTag::E});
    REQUIRE(o.points.size() == 3);
    CHECK(o.points[0] == f.lambda_inv());
    CHECK(o.points[1] == f.lambda() - FieldElement::from_rat(f.context(), Rat(2)));
    CHECK(o.points[2] == FieldElement::one(f.context()));
    CHECK(o.label_of_one() == 3);
    CHECK(o.image_label(1) == 3);
    CHECK(o.point(2) == o.points[1]);
    CHECK_THROWS_AS(o.point(0), input_error);

    CHECK(digit_polynomial(f) == IntPoly{1, -2, -2, 1});

    CHECK(to_string(PointTag::Pm2) == "P_{m-2}");
    CHECK(to_string(PointTag::Pm) == "P_m");
    CHECK(to_string(PointTag::Other) == "other");
}

TEST_CASE("transition matrices of the trace-golden map") {
    ZigZagMap f = trace_golden_map();

    CHECK(markov_partition(f, PartitionFlavor::postcritical).size() == 4);
    CHECK(markov_partition(f, PartitionFlavor::weak).size() == 5);

    PartitionRelation rel = partition_relation(f);
    CHECK(rel.postcritical.entries ==
          int_matrix({{1, 0, 2}, {1, 1, 1}, {1, 1, 0}}));
    CHECK(rel.weak.entries == int_matrix({{1, 0, 1, 1},
                                          {1, 1, 0, 1},
                                          {1, 1, 0, 0},
                                          {1, 1, 0, 0}}));
    CHECK(rel.chi_postcritical == IntPoly{1, -2, -2, 1});
    CHECK(rel.chi_weak == IntPoly{0, 1, -2, -2, 1});
    CHECK(rel.extra_cuts == 1);

    PrimitivityResult pp = is_primitive(rel.postcritical);
    CHECK(pp.primitive);
    CHECK(pp.power == 2);
    PrimitivityResult pw = is_primitive(rel.weak);
    CHECK(pw.primitive);
    CHECK(pw.power == 2);
}

TEST_CASE("characteristic polynomials of explicit matrices") {
    CHECK(char_poly(int_matrix({{2, 1}, {1, 1}})) == IntPoly{1, -3, 1});
    CHECK(char_poly(int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
          IntPoly{-1, 3, -3, 1});
}

TEST_CASE("exact Perron eigendata") {
    ZigZagMap f = trace_golden_map();
    TransitionMatrix mp = transition_matrix(f, PartitionFlavor::postcritical);
    PerronData pd = perron_data(mp);

    CHECK(pd.ctx->minpoly() == IntPoly{1, -3, 1});
    CHECK(pd.lambda.decimal(12) == "2.618033988750");
    CHECK(pd.primitive);
    CHECK(pd.primitivity_power == 2);
    CHECK(pd.warning.empty());

    auto ctx = pd.ctx;
    FieldElement one = FieldElement::one(ctx);
    FieldElement sum = FieldElement::zero(ctx);
    FieldElement dot = FieldElement::zero(ctx);
    for (size_t i = 0; i < pd.left.size(); ++i) {
        CHECK(pd.left[i].sign() > 0);
        CHECK(pd.right[i].sign() > 0);
        sum += pd.left[i];
        dot += pd.left[i] * pd.right[i];
    }
    CHECK(sum == one);
    CHECK(dot == one);

    // M r = lambda r and l M = lambda l, entry by entry
    int n = mp.size();
    for (int i = 0; i < n; ++i) {
        FieldElement row = FieldElement::zero(ctx);
        FieldElement col = FieldElement::zero(ctx);
        for (int j = 0; j < n; ++j) {
            row += FieldElement::from_rat(ctx, Rat(mp.entries[i][j])) *
                   pd.right[j];
            col += pd.left[j] *
                   FieldElement::from_rat(ctx, Rat(mp.entries[j][i]));
        }
        CHECK(row == pd.lambda * pd.right[i]);
        CHECK(col == pd.lambda * pd.left[i]);
    }

    PerronNumeric pn = perron_data_numeric(mp);
    CHECK(std::abs(pn.lambda - 2.618033988749895) < 1e-9);
    CHECK(pn.iterations > 0);
}

TEST_CASE("golden tent map has a reducible weak matrix") {
    ZigZagMap g = ZigZagMap::make(1, +1, perron_root(IntPoly{1, 0, -2, 1}));
    CHECK(g.m() == 1);
    CHECK(!g.standard());  // sign +1 with odd modality

    auto walked = orbit_of_one(g);
    REQUIRE(std::holds_alternative<PostcriticalData>(walked));
    CHECK(std::get<PostcriticalData>(walked).period == 3);

    CHECK(digit_polynomial(g) == IntPoly{1, 0, -2, 1});

    TransitionMatrix tw = transition_matrix(g, PartitionFlavor::weak);
    TransitionMatrix tp = transition_matrix(g, PartitionFlavor::postcritical);
    auto expected = int_matrix({{1, 0, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(tw.entries == expected);
    CHECK(tp.entries == expected);
    CHECK(char_poly(tw) == IntPoly{1, 0, -2, 1});

    CHECK(!is_primitive(tw).primitive);
    CHECK_THROWS_AS(perron_data(tw), input_error);

    // the recurrent 2x2 minor is primitive with power 2
    PrimitivityResult minor = is_primitive(int_matrix({{0, 1}, {1, 1}}));
    CHECK(minor.primitive);
    CHECK(minor.power == 2);
}

TEST_CASE("silver-ratio map has a period-2 orbit") {
    ZigZagMap f =
        ZigZagMap::make(2, +1, AlgebraicReal(IntPoly{-1, -2, 1}, Rat(2), Rat(3)));
    CHECK(f.standard());

    auto walked = orbit_of_one(f);
    REQUIRE(std::holds_alternative<PostcriticalData>(walked));
    const PostcriticalData& o = std::get<PostcriticalData>(walked);
    CHECK(o.label_base == 1);
    CHECK(o.period == 2);
    CHECK(o.perm == std::vector<int>{2, 1});
    CHECK(o.taxonomy == std::vector<PointTag>{PointTag::C, PointTag::E});
    // the first postcritical point is the critical point, and it equals
    // both 1/lambda and lambda - 2
    auto ctx = f.context();
    CHECK(o.points[0] == f.lambda_inv());
    CHECK(o.points[0] == f.lambda() - FieldElement::from_rat(ctx, Rat(2)));

    CHECK(digit_polynomial(f) == IntPoly{-1, -2, 1});
}

TEST_CASE("negative four-branch map") {
    ZigZagMap f =
        ZigZagMap::make(3, -1, perron_root(IntPoly{1, -3, -3, -3, 1}));
    CHECK(f.m() == 3);
    CHECK(f.sign() == -1);
    CHECK(f.standard());

    REQUIRE(f.branches().size() == 4);
    CHECK(!f.branches()[0].rising);
    CHECK(f.branches()[0].c == 1);
    CHECK(f.branches()[1].rising);
    CHECK(f.branches()[1].c == 1);
    CHECK(!f.branches()[2].rising);
    CHECK(f.branches()[2].c == 3);
    CHECK(f.branches()[3].rising);
    CHECK(f.branches()[3].c == 3);

    auto walked = orbit_of_one(f);
    REQUIRE(std::holds_alternative<PostcriticalData>(walked));
    const PostcriticalData& o = std::get<PostcriticalData>(walked);
    CHECK(o.label_base == 0);
    CHECK(o.period == 5);
    CHECK(o.perm == std::vector<int>{4, 0, 1, 2, 3});
    CHECK(o.taxonomy == std::vector<PointTag>{PointTag::E, PointTag::C,
                                              PointTag::R, PointTag::Pm,
                                              PointTag::E});
    CHECK(o.label_of_one() == 4);

    CHECK(digit_polynomial(f) == IntPoly{1, -3, -3, -3, 1});
}

TEST_CASE("rational slopes are not postcritically periodic") {
    ZigZagMap f =
        ZigZagMap::make(2, +1, AlgebraicReal::from_rational(Rat(5, 2)));
    auto walked = orbit_of_one(f);
    REQUIRE(std::holds_alternative<NotPeriodic>(walked));
    CHECK(!std::get<NotPeriodic>(walked).eventually_periodic);

    auto capped = orbit_of_one(f, 5);
    REQUIRE(std::holds_alternative<NotPeriodic>(capped));
    CHECK(std::get<NotPeriodic>(capped).steps == 5);

    // the orbit neither closes up nor reaches the boundary
    CHECK_THROWS_AS(digit_polynomial(f), undecided_error);
}
