#include "zzpa/galois.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <utility>

#include "zzpa/error.hpp"
#include "zzpa/linalg.hpp"

namespace zzpa {

namespace {

FieldElement branch_constant(const ZigZagMap& f, int branch) {
    return FieldElement::from_rat(f.context(), Rat(f.branches().at(branch).c));
}

FieldElement half_of(const FieldElement& a) {
    return a * FieldElement::from_rat(a.context(), Rat(1, 2));
}

// Weak partition with the branch acting on each cell. Weak cells contain no
// critical point in their interior, so the branch at the left endpoint acts
// on the whole cell.
struct WeakData {
    std::vector<FieldElement> cuts;
    std::vector<std::vector<Int>> mat;
    std::vector<int> branch_of_cell;
    int d = 0;
};

WeakData weak_data(const ZigZagMap& f) {
    TransitionMatrix tm = transition_matrix(f, PartitionFlavor::weak);
    WeakData w{std::move(tm.cuts), std::move(tm.entries), {}, 0};
    w.d = static_cast<int>(w.mat.size());
    for (int i = 0; i < w.d; ++i) {
        for (int j = 0; j < w.d; ++j) {
            if (w.mat[i][j] < 0 || w.mat[i][j] > 1) {
                throw verification_error(
                    "weak transition matrix entry outside {0, 1}");
            }
        }
    }
    w.branch_of_cell.reserve(w.d);
    for (int j = 0; j < w.d; ++j) {
        w.branch_of_cell.push_back(f.branch_index(w.cuts[j]));
    }
    return w;
}

// y-coordinate of the distinguished lift of every postcritical point: the
// fixed point of the composed vertical contraction on cycles, pulled back
// along the preperiod otherwise (the vertical inverse expands by lambda but
// stays exact).
std::vector<FieldElement> distinguished_ys(const ZigZagMap& f,
                                           const std::vector<FieldElement>& pc) {
    const FieldContextPtr& ctx = f.context();
    const int cap = f.default_orbit_cap();
    std::vector<FieldElement> out;
    for (const FieldElement& p : pc) {
        std::vector<FieldElement> path{p};
        std::vector<int> taken;
        int cycle_start = -1;
        for (int step = 0; step < cap && cycle_start < 0; ++step) {
            int i = f.branch_index(path.back());
            taken.push_back(i);
            FieldElement next = f.apply_branch(i, path.back());
            for (size_t t = 0; t < path.size(); ++t) {
                if (path[t] == next) {
                    cycle_start = static_cast<int>(t);
                    break;
                }
            }
            path.push_back(std::move(next));
        }
        if (cycle_start < 0) {
            throw undecided_error(
                "postcritical point did not close up within the step budget");
        }
        FieldElement alpha = FieldElement::one(ctx);
        FieldElement beta = FieldElement::zero(ctx);
        for (size_t s = cycle_start; s < taken.size(); ++s) {
            FieldElement c = branch_constant(f, taken[s]);
            if (f.branches()[taken[s]].rising) {
                alpha = f.lambda_inv() * alpha;
                beta = f.lambda_inv() * beta - c;
            } else {
                alpha = -(f.lambda_inv() * alpha);
                beta = c - f.lambda_inv() * beta;
            }
        }
        FieldElement y = beta * (FieldElement::one(ctx) - alpha).inverse();
        for (int s = cycle_start - 1; s >= 0; --s) {
            FieldElement c = branch_constant(f, taken[s]);
            y = f.branches()[taken[s]].rising ? f.lambda() * (y + c)
                                              : f.lambda() * (c - y);
        }
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace

FieldElement GaloisLift::vertical(int branch, const FieldElement& y) const {
    const Branch& br = f_.branches().at(branch);
    FieldElement c = branch_constant(f_, branch);
    if (br.rising) return f_.lambda_inv() * y - c;
    return c - f_.lambda_inv() * y;
}

std::pair<FieldElement, FieldElement> GaloisLift::apply(
    const FieldElement& x, const FieldElement& y) const {
    int i = f_.branch_index(x);
    return {f_.apply_branch(i, x), vertical(i, y)};
}

std::vector<PeriodicLift> periodic_lifts(const ZigZagMap& f) {
    const FieldContextPtr& ctx = f.context();
    const int cap = f.default_orbit_cap();
    std::vector<PeriodicLift> out;
    for (const FieldElement& p : postcritical_set(f)) {
        // Compose the vertical affine maps y -> alpha*y + beta along the
        // cycle of p; the composite is a contraction with a unique fixed
        // point because |alpha| = lambda^{-period} < 1.
        FieldElement alpha = FieldElement::one(ctx);
        FieldElement beta = FieldElement::zero(ctx);
        FieldElement x = p;
        int period = 0;
        for (int step = 0; step < cap; ++step) {
            int i = f.branch_index(x);
            FieldElement c = branch_constant(f, i);
            if (f.branches()[i].rising) {
                alpha = f.lambda_inv() * alpha;
                beta = f.lambda_inv() * beta - c;
            } else {
                alpha = -(f.lambda_inv() * alpha);
                beta = c - f.lambda_inv() * beta;
            }
            x = f.apply_branch(i, x);
            if (x == p) {
                period = step + 1;
                break;
            }
        }
        if (period == 0) continue;  // preperiodic point, no periodic lift
        FieldElement y =
            beta * (FieldElement::one(ctx) - alpha).inverse();
        out.push_back(PeriodicLift{p, std::move(y), period});
    }
    return out;
}

NumericLimitSet limit_set_numeric(const ZigZagMap& f, double tol,
                                  int max_iterations, int fragment_cap) {
    WeakData w = weak_data(f);
    const double lam = f.lambda().approx();
    const double li = 1.0 / lam;
    // Absorbing radius: every vertical fixed point satisfies
    // |y| <= (m + 1) lambda / (lambda - 1); pad it a little.
    const double radius = (f.m() + 1) * lam / (lam - 1.0) * 1.25 + 1.0;
    const double merge_eps = 1e-13 * (1.0 + radius);

    using Iv = std::pair<double, double>;
    std::vector<std::vector<Iv>> fib(w.d, std::vector<Iv>{{-radius, radius}});

    NumericLimitSet result;
    result.verdict = "inconclusive";
    for (int it = 1; it <= max_iterations; ++it) {
        std::vector<std::vector<Iv>> next(w.d);
        bool overflow = false;
        for (int i = 0; i < w.d && !overflow; ++i) {
            std::vector<Iv> pieces;
            for (int j = 0; j < w.d; ++j) {
                if (w.mat[i][j] == 0) continue;
                const Branch& br = f.branches()[w.branch_of_cell[j]];
                const double c = static_cast<double>(br.c.get_d());
                for (const Iv& iv : fib[j]) {
                    if (br.rising) {
                        pieces.emplace_back(li * iv.first - c,
                                            li * iv.second - c);
                    } else {
                        pieces.emplace_back(c - li * iv.second,
                                            c - li * iv.first);
                    }
                }
            }
            std::sort(pieces.begin(), pieces.end());
            std::vector<Iv> merged;
            for (const Iv& iv : pieces) {
                if (!merged.empty() &&
                    iv.first <= merged.back().second + merge_eps) {
                    merged.back().second =
                        std::max(merged.back().second, iv.second);
                } else {
                    merged.push_back(iv);
                }
            }
            if (static_cast<int>(merged.size()) > fragment_cap) {
                overflow = true;
            }
            next[i] = std::move(merged);
        }
        if (overflow) {
            result.fibers = std::move(fib);
            result.verdict = "non-rectangular (fragmented)";
            result.iterations = it;
            return result;
        }
        double delta = 0.0;
        for (int i = 0; i < w.d; ++i) {
            auto span = [](const std::vector<Iv>& v) {
                double len = 0.0;
                for (const Iv& iv : v) len += iv.second - iv.first;
                return len;
            };
            delta = std::max(delta,
                             std::abs(next[i].front().first -
                                      fib[i].front().first));
            delta = std::max(delta, std::abs(next[i].back().second -
                                             fib[i].back().second));
            delta = std::max(delta, std::abs(span(next[i]) - span(fib[i])));
        }
        fib = std::move(next);
        if (delta < tol) {
            bool single = true;
            for (const auto& v : fib) single = single && v.size() == 1;
            result.fibers = std::move(fib);
            result.verdict =
                single ? "likely rectangular" : "non-rectangular (fragmented)";
            result.iterations = it;
            return result;
        }
    }
    result.fibers = std::move(fib);
    result.iterations = max_iterations;
    return result;
}

std::string to_string(Alignment a) {
    switch (a) {
        case Alignment::lower: return "lower";
        case Alignment::upper: return "upper";
        default: return "both";
    }
}

std::variant<LimitSet, NotRectangular> limit_set_exact(const ZigZagMap& f) {
    const FieldContextPtr& ctx = f.context();
    const FieldElement zero = FieldElement::zero(ctx);
    const FieldElement one = FieldElement::one(ctx);
    WeakData w = weak_data(f);
    const int d = w.d;

    std::vector<std::vector<int>> incoming(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (w.mat[i][j] == 1) incoming[i].push_back(j);
        }
        if (incoming[i].empty()) {
            return NotRectangular{"a weak cell is never covered by a branch "
                                  "image, so its fiber is empty",
                                  0};
        }
    }

    // Heights must be a positive lambda-eigenvector of the weak matrix; the
    // eigenspace over Q(lambda) has to be a line or nothing is certifiable.
    FieldMatrix eig;
    for (int i = 0; i < d; ++i) {
        FieldVector row(d, zero);
        for (int j = 0; j < d; ++j) {
            if (w.mat[i][j] != 0) {
                row[j] = FieldElement::from_rat(ctx, Rat(w.mat[i][j]));
            }
        }
        row[i] -= f.lambda();
        eig.push_back(std::move(row));
    }
    KernelResult ker = kernel_vector(std::move(eig));
    if (ker.nullity == 0) {
        throw verification_error(
            "lambda is not an eigenvalue of the weak transition matrix");
    }
    if (ker.nullity != 1) {
        throw verification_error(
            "Perron eigenspace of the weak transition matrix is not "
            "one-dimensional");
    }
    FieldVector v = std::move(ker.v);
    int lead = -1;
    for (int i = 0; i < d && lead < 0; ++i) {
        if (!v[i].is_zero()) lead = i;
    }
    if (v[lead].sign() < 0) {
        for (auto& e : v) e = -e;
    }
    for (const auto& e : v) {
        if (e.sign() <= 0) {
            return NotRectangular{
                "the lambda-eigenvector of the weak matrix is not strictly "
                "positive, so no rectangle union can be invariant",
                0};
        }
    }

    // Linear forms over the unknowns (b_0, ..., b_{d-1}, s).
    struct LinForm {
        FieldVector coef;
        FieldElement cst;
    };
    auto zero_form = [&] { return LinForm{FieldVector(d + 1, zero), zero}; };
    // Bottom of the image of rect j under the vertical branch of its cell.
    auto image_bottom = [&](int j) {
        LinForm L = zero_form();
        const Branch& br = f.branches()[w.branch_of_cell[j]];
        FieldElement c = branch_constant(f, w.branch_of_cell[j]);
        if (br.rising) {
            L.coef[j] = f.lambda_inv();
            L.cst = -c;
        } else {
            L.coef[j] = -f.lambda_inv();
            L.coef[d] = -(f.lambda_inv() * v[j]);
            L.cst = c;
        }
        return L;
    };

    // Stacked images inside fiber i, in the order ord: the first piece
    // starts at b_i, consecutive pieces touch, the last ends at b_i + h_i.
    auto build_system = [&](const std::vector<std::vector<int>>& ord) {
        std::pair<FieldMatrix, FieldVector> sys;
        auto push_eq = [&](LinForm eq) {
            // eq.coef . u + eq.cst = 0
            sys.first.push_back(std::move(eq.coef));
            sys.second.push_back(-eq.cst);
        };
        for (int i = 0; i < d; ++i) {
            const auto& o = ord[i];
            const int r = static_cast<int>(o.size());
            {
                LinForm eq = image_bottom(o[0]);
                for (auto& c : eq.coef) c = -c;
                eq.cst = -eq.cst;
                eq.coef[i] += one;
                push_eq(std::move(eq));
            }
            for (int t = 0; t + 1 < r; ++t) {
                LinForm eq = image_bottom(o[t + 1]);
                LinForm prev = image_bottom(o[t]);
                for (int c = 0; c <= d; ++c) eq.coef[c] -= prev.coef[c];
                eq.cst -= prev.cst;
                eq.coef[d] -= f.lambda_inv() * v[o[t]];
                push_eq(std::move(eq));
            }
            {
                LinForm eq = image_bottom(o[r - 1]);
                for (auto& c : eq.coef) c = -c;
                eq.cst = -eq.cst;
                eq.coef[i] += one;
                eq.coef[d] += v[i] - f.lambda_inv() * v[o[r - 1]];
                push_eq(std::move(eq));
            }
        }
        return sys;
    };

    int tried = 0;
    bool saw_underdetermined = false;
    auto attempt =
        [&](const std::vector<std::vector<int>>& ord) -> std::optional<FieldVector> {
        ++tried;
        auto [A, rhs] = build_system(ord);
        SolveResult sr = solve_linear(A, rhs);
        if (sr.status == SolveStatus::underdetermined) {
            saw_underdetermined = true;
            return std::nullopt;
        }
        if (sr.status == SolveStatus::inconsistent) return std::nullopt;
        if (sr.x[d].sign() <= 0) return std::nullopt;
        // Re-verify every stacking equation against the solution.
        for (size_t r = 0; r < A.size(); ++r) {
            FieldElement lhs = zero;
            for (int c = 0; c <= d; ++c) lhs += A[r][c] * sr.x[c];
            if (lhs != rhs[r]) return std::nullopt;
        }
        return std::move(sr.x);
    };

    // The numeric sketch suggests the stacking order; exactness never
    // depends on it.
    NumericLimitSet numeric = limit_set_numeric(f);
    std::optional<FieldVector> sol;
    if (numeric.verdict == "likely rectangular") {
        std::vector<std::vector<int>> ord = incoming;
        const double li = 1.0 / f.lambda().approx();
        auto numeric_bottom = [&](int j) {
            const Branch& br = f.branches()[w.branch_of_cell[j]];
            const double c = static_cast<double>(br.c.get_d());
            if (br.rising) return li * numeric.fibers[j].front().first - c;
            return c - li * numeric.fibers[j].back().second;
        };
        for (auto& o : ord) {
            std::sort(o.begin(), o.end(), [&](int a, int b) {
                return numeric_bottom(a) < numeric_bottom(b);
            });
        }
        sol = attempt(ord);
    }

    if (!sol) {
        const long pattern_cap = 20000;
        long total = 1;
        for (int i = 0; i < d && total <= pattern_cap; ++i) {
            long fact = 1;
            for (size_t t = 2; t <= incoming[i].size(); ++t) {
                fact *= static_cast<long>(t);
            }
            total *= fact;
        }
        if (total > pattern_cap) {
            throw undecided_error(
                "stacking pattern enumeration exceeds the budget and the "
                "numeric phase was not conclusive");
        }
        std::vector<std::vector<std::vector<int>>> perms(d);
        for (int i = 0; i < d; ++i) {
            std::vector<int> cur = incoming[i];
            std::sort(cur.begin(), cur.end());
            do {
                perms[i].push_back(cur);
            } while (std::next_permutation(cur.begin(), cur.end()));
        }
        std::vector<size_t> odo(d, 0);
        while (true) {
            std::vector<std::vector<int>> ord(d);
            for (int i = 0; i < d; ++i) ord[i] = perms[i][odo[i]];
            sol = attempt(ord);
            if (sol) break;
            int pos = d - 1;
            while (pos >= 0 && ++odo[pos] == perms[pos].size()) {
                odo[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        if (!sol) {
            if (saw_underdetermined) {
                throw undecided_error(
                    "some stacking pattern left the offset system "
                    "underdetermined; rectangularity is undecided");
            }
            return NotRectangular{
                "no stacking order tiles the fibers exactly", tried};
        }
    }

    // The solved union is exactly invariant, hence equals the limit set.
    const FieldVector& u = *sol;
    FieldElement scale = u[d];
    LimitSet ls{ctx,  {},   {},    {},    scale, {},
                {},   {},   zero,  false, false, ""};
    ls.cuts = w.cuts;
    for (int i = 0; i < d; ++i) {
        FieldElement h = scale * v[i];
        ls.heights.push_back(h);
        ls.rects.push_back(Rect{w.cuts[i], w.cuts[i + 1], u[i], u[i] + h});
    }

    // Widths are a left lambda-eigenvector of the weak matrix.
    for (int j = 0; j < d; ++j) {
        FieldElement wj = w.cuts[j + 1] - w.cuts[j];
        FieldElement covered = zero;
        for (int i = 0; i < d; ++i) {
            if (w.mat[i][j] == 1) covered += w.cuts[i + 1] - w.cuts[i];
        }
        if (f.lambda() * wj != covered) {
            throw verification_error("widths identity failed");
        }
    }
    // Fiber heights reproduce themselves under the branch images.
    for (int i = 0; i < d; ++i) {
        FieldElement sum = zero;
        for (int j : incoming[i]) sum += f.lambda_inv() * ls.heights[j];
        if (sum != ls.heights[i]) {
            throw verification_error("fiber height identity failed");
        }
    }
    // Total area of the branch images equals the total area.
    FieldElement area = zero;
    for (int i = 0; i < d; ++i) {
        area += (w.cuts[i + 1] - w.cuts[i]) * ls.heights[i];
    }
    FieldElement image_area = zero;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            if (w.mat[i][j] == 1) {
                image_area += (w.cuts[i + 1] - w.cuts[i]) *
                              (f.lambda_inv() * ls.heights[j]);
            }
        }
    }
    if (area != image_area) {
        throw verification_error("area preservation failed");
    }
    ls.area = area;

    // Alignment dichotomy at the interior cuts. A violation certifies that
    // the invariant union of rectangles is not a limit set of the required
    // shape, so it is a verdict, not an internal failure.
    std::vector<FieldElement> pc = postcritical_set(f);
    auto pc_index = [&](const FieldElement& x) -> int {
        for (size_t t = 0; t < pc.size(); ++t) {
            if (pc[t] == x) return static_cast<int>(t);
        }
        return -1;
    };
    for (int t = 1; t < d; ++t) {
        bool lower = ls.rects[t - 1].y_lo == ls.rects[t].y_lo;
        bool upper = ls.rects[t - 1].y_hi == ls.rects[t].y_hi;
        bool post = pc_index(w.cuts[t]) >= 0;
        if (!lower && !upper) {
            return NotRectangular{
                "adjacent rectangles are offset on both edges at x = " +
                    w.cuts[t].decimal(12),
                tried};
        }
        if (post && lower && upper) {
            return NotRectangular{
                "no vertical boundary component over the postcritical "
                "point x = " +
                    w.cuts[t].decimal(12),
                tried};
        }
        if (!post && !(lower && upper)) {
            return NotRectangular{
                "vertical boundary component over the non-postcritical "
                "cut x = " +
                    w.cuts[t].decimal(12),
                tried};
        }
        Alignment a = (lower && upper) ? Alignment::both
                      : lower          ? Alignment::lower
                                       : Alignment::upper;
        ls.alignments.push_back(AlignmentEntry{t, a, post});
    }

    // Vertical boundary components carry the center property: the
    // distinguished lift of each postcritical point must sit at the metric
    // center of its component. An off-center lift is again a verdict.
    ls.lifts = periodic_lifts(f);
    std::vector<FieldElement> dys = distinguished_ys(f, pc);
    std::optional<NotRectangular> off_center;
    auto add_component = [&](const FieldElement& x, FieldElement lo,
                             FieldElement hi, bool full_edge) {
        if (lo == hi) {
            ls.isolated_points = true;
            ls.note = "degenerate vertical component detected";
        }
        bool centered = false;
        int t = pc_index(x);
        if (t >= 0) {
            if (dys[t] == half_of(lo + hi)) {
                centered = true;
            } else if (!off_center) {
                off_center = NotRectangular{
                    "distinguished lift of the postcritical point x = " +
                        x.decimal(12) +
                        " is off-center in its vertical boundary component",
                    tried};
            }
        } else if (ls.note.empty()) {
            ls.note =
                "a boundary edge is not postcritical; no center condition "
                "applies there";
        }
        ls.vertical.push_back(
            VerticalComponent{x, std::move(lo), std::move(hi), full_edge,
                              centered});
    };
    add_component(w.cuts[0], ls.rects[0].y_lo, ls.rects[0].y_hi, true);
    for (const AlignmentEntry& e : ls.alignments) {
        if (!e.postcritical) continue;
        const Rect& L = ls.rects[e.cut_index - 1];
        const Rect& R = ls.rects[e.cut_index];
        if (e.alignment == Alignment::lower) {
            bool left_below = L.y_hi.compare(R.y_hi) < 0;
            add_component(w.cuts[e.cut_index],
                          left_below ? L.y_hi : R.y_hi,
                          left_below ? R.y_hi : L.y_hi, false);
        } else {
            bool left_below = L.y_lo.compare(R.y_lo) < 0;
            add_component(w.cuts[e.cut_index],
                          left_below ? L.y_lo : R.y_lo,
                          left_below ? R.y_lo : L.y_lo, false);
        }
    }
    add_component(w.cuts[d], ls.rects[d - 1].y_lo, ls.rects[d - 1].y_hi,
                  true);
    if (off_center) return *off_center;
    ls.center_property = true;

    return ls;
}

PAVerdict is_pA_type(const ZigZagMap& f) {
    if (f.m() < 2) {
        throw input_error("out of scope: unimodal regime (lambda <= 2)");
    }
    auto walked = orbit_of_one(f);
    if (!std::holds_alternative<PostcriticalData>(walked)) {
        throw input_error(
            "orbit of 1 is not periodic: the map is not postcritically "
            "periodic");
    }
    IntPoly digits = digit_polynomial(f);
    FieldElement at_inverse = evaluate(digits, f.lambda_inv());
    if (!at_inverse.is_zero()) {
        return PAVerdict{false, "D_f(1/lambda) != 0",
                         std::move(at_inverse), std::nullopt};
    }
    auto ls = limit_set_exact(f);
    if (std::holds_alternative<NotRectangular>(ls)) {
        return PAVerdict{
            false,
            "limit set is not rectangular: " +
                std::get<NotRectangular>(ls).reason,
            std::nullopt, std::nullopt};
    }
    return PAVerdict{true,
                     "D_f(1/lambda) = 0 and the limit set is rectangular",
                     std::nullopt, std::move(std::get<LimitSet>(ls))};
}

SingularityReport singularity_report(const ZigZagMap& f,
                                     const PostcriticalData& orbit) {
    std::vector<FieldElement> pc = postcritical_set(f);
    for (const FieldElement& p : orbit.points) {
        bool found = false;
        for (const FieldElement& q : pc) {
            if (p == q) {
                found = true;
                break;
            }
        }
        if (!found) {
            throw verification_error(
                "orbit point missing from the postcritical set");
        }
    }
    const int n = static_cast<int>(pc.size());
    SingularityReport r;
    r.one_prongs = n;
    r.infinity_prongs = n - 2;
    r.euler_sum = n + (2 - r.infinity_prongs);
    if (r.euler_sum != 4) {
        throw verification_error("Euler-Poincare sum is not 4");
    }
    r.punctures = n;
    r.marked_points = n + 1;
    if (n % 2 == 0) {
        r.double_cover_genus = (n - 2) / 2;
    } else {
        r.note =
            "odd one-prong count: the orientation double cover is not "
            "reported";
    }
    r.trace_field_degree =
        companion_polynomial(f.context()->minpoly()).degree();
    return r;
}

}  // namespace zzpa
