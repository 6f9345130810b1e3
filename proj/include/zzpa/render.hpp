#pragma once

#include <string>

#include "zzpa/galois.hpp"
#include "zzpa/zigzag.hpp"

namespace zzpa {

// Figure geometry and palette. Rendering is deterministic: identical inputs
// produce byte-identical SVG text.
struct FigureSpec {
    int width = 640;
    int height = 640;
    int margin = 40;
    int precision = 8;  // decimal places of every emitted coordinate
    std::string graph_color = "#000000";
    std::string orbit_color = "#d62728";      // the cycle through 1
    std::string fixed_color = "#1f77b4";      // the orbit of 0 when disjoint
    std::string critical_color = "#888888";   // dashed critical lines
    std::string rect_fill = "#dce9f9";
    std::string rect_stroke = "#2f5f9e";
    std::string component_color = "#ff7f0e";  // vertical boundary pieces
    std::string lift_color = "#d62728";
};

// Graph of f over the unit square: one polyline with m+1 segments, dashed
// vertical lines at the critical points, the postcritical cycle marked as
// dots on the graph with taxonomy labels, and a dot at the origin when 0 is
// a fixed point outside the cycle.
std::string render_zigzag_svg(const ZigZagMap& f, const PostcriticalData& orbit,
                              const FigureSpec& spec = {});

// Rectangle family of a certified limit set with the distinguished periodic
// lifts and the vertical boundary components highlighted.
std::string render_limit_set_svg(const LimitSet& L, const FigureSpec& spec = {});

}  // namespace zzpa
