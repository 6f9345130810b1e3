#include "doctest.h"

#include <cmath>
#include <string>
#include <variant>

#include "zzpa/classify.hpp"
#include "zzpa/render.hpp"

using namespace zzpa;

namespace {

int count_of(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (size_t p = hay.find(needle); p != std::string::npos;
         p = hay.find(needle, p + needle.size()))
        ++n;
    return n;
}

// vertex count of the polyline with the given stroke color
int graph_vertices(const std::string& svg, const std::string& stroke) {
    size_t p = svg.find("stroke=\"" + stroke + "\" stroke-width=\"2\"");
    if (p == std::string::npos) return -1;
    size_t start = svg.rfind("points=\"", p);
    if (start == std::string::npos) return -1;
    size_t lo = start + 8;
    size_t hi = svg.find('"', lo);
    return count_of(svg.substr(lo, hi - lo), ",");
}

}  // namespace

TEST_CASE("graph figure of the trace-golden map") {
    BuiltMap m1 = build_zigzag(2, FractionLabel(1, 2));
    std::string svg = render_zigzag_svg(m1.map, m1.orbit);

    CHECK(svg == render_zigzag_svg(m1.map, m1.orbit));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("width=\"640\"") != std::string::npos);

    // three branch segments, three orbit dots, two dashed critical lines
    CHECK(graph_vertices(svg, "#000000") == 4);
    CHECK(count_of(svg, "fill=\"#d62728\"") == 3);
    CHECK(count_of(svg, "stroke-dasharray=\"4,4\"") == 2);
    CHECK(count_of(svg, "<text") >= 3);
}

TEST_CASE("graph figure of the golden tent") {
    AlgebraicReal phi(IntPoly{-1, -1, 1}, Rat(1), Rat(2));
    ZigZagMap tent = ZigZagMap::make(1, +1, phi);
    auto walked = orbit_of_one(tent);
    REQUIRE(std::holds_alternative<PostcriticalData>(walked));
    std::string svg =
        render_zigzag_svg(tent, std::get<PostcriticalData>(walked));
    CHECK(graph_vertices(svg, "#000000") == 3);
    CHECK(count_of(svg, "stroke-dasharray=\"4,4\"") == 1);
}

TEST_CASE("limit set figure of the genus-2 member") {
    BuiltMap f2 = build_zigzag(2, FractionLabel(1, 4));
    auto ls = limit_set_exact(f2.map);
    REQUIRE(std::holds_alternative<LimitSet>(ls));
    const LimitSet& L = std::get<LimitSet>(ls);
    std::string svg = render_limit_set_svg(L);

    CHECK(svg == render_limit_set_svg(L));
    CHECK(count_of(svg, "<circle") == 6);
    CHECK(count_of(svg, "<rect") == 1 + static_cast<int>(L.rects.size()));
    CHECK(count_of(svg, "stroke-width=\"3\"") ==
          static_cast<int>(L.vertical.size()));

    // the first limit-set rectangle (second <rect> overall, after the
    // background) parses back to margin + inner_width * x_lo
    size_t q = svg.find("<rect", svg.find("<rect") + 1);
    REQUIRE(q != std::string::npos);
    size_t xa = svg.find("x=\"", q) + 3;
    double got = std::stod(svg.substr(xa, svg.find('"', xa) - xa));
    double want = 40.0 + 560.0 * L.rects[0].x_lo.approx();
    CHECK(std::abs(got - want) < 1e-7);
}

TEST_CASE("figure options change the geometry") {
    BuiltMap m1 = build_zigzag(2, FractionLabel(1, 2));
    FigureSpec spec;
    spec.width = 320;
    spec.height = 200;
    std::string svg = render_zigzag_svg(m1.map, m1.orbit, spec);
    CHECK(svg.find("width=\"320\"") != std::string::npos);
    CHECK(svg.find("height=\"200\"") != std::string::npos);
}
