#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zzpa/field.hpp"
#include "zzpa/zigzag.hpp"

namespace zzpa {

// Skew product over f: (x, y) -> (f_i(x), g_i(y)) where branch i of f has
// slope +-lambda and the vertical companion g_i keeps the same constant with
// slope +-1/lambda: rising g_i(y) = y/lambda - i, falling g_i(y) = i+1 -
// y/lambda. The first coordinate always commutes with f by construction.
class GaloisLift {
  public:
    explicit GaloisLift(ZigZagMap f) : f_(std::move(f)) {}

    const ZigZagMap& base() const { return f_; }
    FieldElement vertical(int branch, const FieldElement& y) const;
    std::pair<FieldElement, FieldElement> apply(const FieldElement& x,
                                                const FieldElement& y) const;

  private:
    ZigZagMap f_;
};

// The unique fixed point of the vertical contraction composed along the
// cycle of x, paired with x itself.
struct PeriodicLift {
    FieldElement x;
    FieldElement y;
    int period = 0;
};

// Lifts of the postcritical points that lie on cycles, ascending in x.
// Postcritical points that are merely preperiodic have no periodic lift and
// are skipped (none of the families handled here produce any).
std::vector<PeriodicLift> periodic_lifts(const ZigZagMap& f);

// Floating-point sketch of the limit set: per weak Markov cell, the y-fiber
// as a union of intervals, iterated from an absorbing box until the change
// drops below tol or the fiber fragment count blows past fragment_cap.
struct NumericLimitSet {
    std::vector<std::vector<std::pair<double, double>>> fibers;
    std::string verdict;  // "likely rectangular" | "non-rectangular (fragmented)" | "inconclusive"
    int iterations = 0;
};

NumericLimitSet limit_set_numeric(const ZigZagMap& f, double tol = 1e-9,
                                  int max_iterations = 4096,
                                  int fragment_cap = 64);

struct Rect {
    FieldElement x_lo, x_hi, y_lo, y_hi;
};

enum class Alignment { lower, upper, both };

std::string to_string(Alignment a);

// One entry per interior weak cut: how the neighbouring rectangles meet.
// Postcritical cuts are aligned on exactly one side, purely-critical cuts on
// both (the rectangles are flush there).
struct AlignmentEntry {
    int cut_index = 0;
    Alignment alignment = Alignment::both;
    bool postcritical = false;
};

// A vertical boundary component of the rectangle union: the full left/right
// edge at x = 0 and x = 1, or the offset segment at an interior
// postcritical cut. centered records that the periodic lift of the cut
// bisects the component exactly.
struct VerticalComponent {
    FieldElement x;
    FieldElement y_lo, y_hi;
    bool full_edge = false;
    bool centered = false;
};

// Exactly verified rectangular limit set: one rectangle per weak cell with
// heights scale * v (v the right Perron eigenvector over Q(lambda)), branch
// images tiling each fiber with disjoint interiors, widths/heights/area
// identities checked, the alignment dichotomy holding at every interior
// cut, and every periodic lift centered on its vertical component.
struct LimitSet {
    FieldContextPtr ctx;
    std::vector<FieldElement> cuts;
    std::vector<Rect> rects;
    std::vector<FieldElement> heights;
    FieldElement scale;
    std::vector<AlignmentEntry> alignments;
    std::vector<PeriodicLift> lifts;
    std::vector<VerticalComponent> vertical;
    FieldElement area;
    bool center_property = false;
    bool isolated_points = false;
    std::string note;
};

// Certified refusal: every stacking pattern fails the exact equations (or
// the height eigenvector itself rules a rectangle union out).
struct NotRectangular {
    std::string reason;
    int patterns_tried = 0;
};

// Decides rectangularity of the limit set by exact arithmetic. The numeric
// phase only suggests the stacking order of branch images inside each fiber;
// every accepted pattern is re-verified exactly, and a negative verdict is
// returned only after every pattern fails exactly. Budget exhaustion raises
// undecided_error instead of guessing.
std::variant<LimitSet, NotRectangular> limit_set_exact(const ZigZagMap& f);

// Verdict: pseudo-Anosov type iff D_f(1/lambda) = 0 exactly and the limit
// set is rectangular. witness carries D_f(1/lambda) when condition 1 fails;
// limit_set carries the verified rectangles when the verdict is yes.
struct PAVerdict {
    bool is_pa = false;
    std::string reason;
    std::optional<FieldElement> witness;
    std::optional<LimitSet> limit_set;
};

PAVerdict is_pA_type(const ZigZagMap& f);

// Singularity data of the sphere quotient: every postcritical point is a
// 1-prong, the point at infinity carries #PC - 2 prongs, and the
// Euler-Poincare sum is checked to be 4. The double cover desingularizes
// the odd cone points; its genus exists when #PC is even.
struct SingularityReport {
    int one_prongs = 0;
    int infinity_prongs = 0;
    int euler_sum = 0;
    int punctures = 0;      // #PC, the punctured-sphere count
    int marked_points = 0;  // #PC + 1, counting the point at infinity
    std::optional<int> double_cover_genus;
    int trace_field_degree = 0;
    std::string note;
};

SingularityReport singularity_report(const ZigZagMap& f,
                                     const PostcriticalData& orbit);

}  // namespace zzpa
