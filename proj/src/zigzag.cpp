#include "zzpa/zigzag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "zzpa/error.hpp"
#include "zzpa/linalg.hpp"

namespace zzpa {

namespace {

// Binary search by exact comparison; -1 when absent.
int index_in_sorted(const std::vector<FieldElement>& v, const FieldElement& x) {
    int lo = 0, hi = static_cast<int>(v.size()) - 1;
    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        int c = v[mid].compare(x);
        if (c == 0) return mid;
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return -1;
}

// Keeps v sorted and duplicate-free; returns true when x was new.
bool insert_sorted(std::vector<FieldElement>& v, const FieldElement& x) {
    auto it = v.begin();
    for (; it != v.end(); ++it) {
        int c = it->compare(x);
        if (c == 0) return false;
        if (c > 0) break;
    }
    v.insert(it, x);
    return true;
}

PointTag classify_point(const ZigZagMap& f, const FieldElement& x) {
    if (x.compare(Rat(0)) == 0 || x.compare(Rat(1)) == 0) return PointTag::E;
    int j = f.branch_index(x);
    if (j >= 1 && x == f.critical_point(j))
        return j == 1 ? PointTag::C : PointTag::Other;
    if (j == f.m() - 1) return PointTag::R;
    if (j == f.m() - 2) return PointTag::Pm2;
    if (j == f.m()) return PointTag::Pm;
    return PointTag::Other;
}

// cycle = 1, f(1), ..., f^{p-1}(1) with f of the last point equal to 1.
PostcriticalData assemble_orbit(const ZigZagMap& f,
                                const std::vector<FieldElement>& cycle) {
    int p = static_cast<int>(cycle.size());
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cycle[a].compare(cycle[b]) < 0;
    });
    std::vector<int> position(p);
    for (int i = 0; i < p; ++i) position[order[i]] = i;

    PostcriticalData data;
    data.label_base = cycle[order[0]].compare(Rat(0)) == 0 ? 0 : 1;
    data.period = p;
    data.points.reserve(p);
    data.perm.resize(p);
    data.taxonomy.reserve(p);
    for (int i = 0; i < p; ++i) {
        int c = order[i];
        data.points.push_back(cycle[c]);
        data.perm[i] = data.label_base + position[(c + 1) % p];
        data.taxonomy.push_back(classify_point(f, cycle[c]));
    }
    return data;
}

IntPoly finish_digit_polynomial(const ZigZagMap& f, const RatPoly& g) {
    IntPoly d = g.clear_denominators();
    if (!d.is_monic())
        throw verification_error("digit polynomial is not monic");
    if (!evaluate(d, f.lambda()).is_zero())
        throw verification_error("digit polynomial does not vanish at lambda");
    return d;
}

// Fraction-free Gaussian elimination; all divisions are exact over Z.
Int bareiss_det(std::vector<std::vector<Int>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int denom = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / denom;
        denom = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

void require_nonnegative_square(const std::vector<std::vector<Int>>& M) {
    int d = static_cast<int>(M.size());
    if (d == 0) throw input_error("matrix is empty");
    for (const auto& row : M) {
        if (static_cast<int>(row.size()) != d)
            throw input_error("matrix is not square");
        for (const Int& e : row)
            if (e < 0) throw input_error("matrix entries must be nonnegative");
    }
}

std::vector<std::vector<char>> boolean_of(const std::vector<std::vector<Int>>& M) {
    int d = static_cast<int>(M.size());
    std::vector<std::vector<char>> b(d, std::vector<char>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) b[i][j] = M[i][j] > 0 ? 1 : 0;
    return b;
}

std::vector<std::vector<char>> boolean_product(
    const std::vector<std::vector<char>>& a,
    const std::vector<std::vector<char>>& b) {
    int d = static_cast<int>(a.size());
    std::vector<std::vector<char>> r(d, std::vector<char>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            if (a[i][k])
                for (int j = 0; j < d; ++j)
                    if (b[k][j]) r[i][j] = 1;
    return r;
}

bool all_positive(const std::vector<std::vector<char>>& a) {
    for (const auto& row : a)
        for (char e : row)
            if (!e) return false;
    return true;
}

// Strongly connected components, Kosaraju; vertex u has an edge to v when
// f(cell u) covers cell v, i.e. M[v][u] > 0.
std::vector<std::vector<int>> strong_components(
    const std::vector<std::vector<Int>>& M) {
    int d = static_cast<int>(M.size());
    std::vector<std::vector<int>> adj(d), radj(d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i)
            if (M[i][j] > 0) {
                adj[j].push_back(i);
                radj[i].push_back(j);
            }
    std::vector<char> seen(d, 0);
    std::vector<int> finish;
    for (int s = 0; s < d; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<int, int>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto [u, next] = stack.back();
            if (next < static_cast<int>(adj[u].size())) {
                ++stack.back().second;
                int v = adj[u][next];
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back({v, 0});
                }
            } else {
                finish.push_back(u);
                stack.pop_back();
            }
        }
    }
    std::vector<std::vector<int>> comps;
    std::vector<char> taken(d, 0);
    for (int idx = d - 1; idx >= 0; --idx) {
        int s = finish[idx];
        if (taken[s]) continue;
        comps.emplace_back();
        std::vector<int> stack{s};
        taken[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comps.back().push_back(u);
            for (int v : radj[u])
                if (!taken[v]) {
                    taken[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

std::string format_minor(const std::vector<std::vector<Int>>& M,
                         const std::vector<int>& block) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (j) os << ",";
            os << M[block[i]][block[j]].get_str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

FieldElement sign_fixed_positive(std::vector<FieldElement>& v) {
    int s = 0;
    for (const auto& e : v) {
        s = e.sign();
        if (s != 0) break;
    }
    if (s < 0)
        for (auto& e : v) e = -e;
    for (const auto& e : v)
        if (e.sign() <= 0)
            throw verification_error("Perron eigenvector is not strictly positive");
    FieldElement sum = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) sum += v[i];
    return sum;
}

}  // namespace

ZigZagMap::ZigZagMap(int m, int sign, FieldContextPtr ctx, FieldElement lambda,
                     FieldElement lambda_inv)
    : m_(m),
      sign_(sign),
      ctx_(std::move(ctx)),
      lambda_(std::move(lambda)),
      lambda_inv_(std::move(lambda_inv)) {
    branches_.reserve(m_ + 1);
    constants_.reserve(m_ + 1);
    for (int i = 0; i <= m_; ++i) {
        bool rising = (i % 2 == 0) == (sign_ > 0);
        Int c = rising ? Int(i) : Int(i + 1);
        branches_.push_back({rising, c});
        constants_.push_back(FieldElement::from_rat(ctx_, Rat(c)));
    }
    criticals_.reserve(m_);
    for (int i = 1; i <= m_; ++i)
        criticals_.push_back(FieldElement::from_rat(ctx_, Rat(i)) * lambda_inv_);
}

ZigZagMap ZigZagMap::make(int m, int sign, const AlgebraicReal& lambda) {
    if (m < 1) throw input_error("modality must be at least 1");
    if (sign != 1 && sign != -1) throw input_error("sign must be +1 or -1");
    if (lambda.compare(Rat(m)) <= 0 || lambda.compare(Rat(m + 1)) >= 0)
        throw input_error(
            "modality/growth mismatch: lambda must lie strictly between m and m+1");
    FieldContextPtr ctx = FieldContext::make(lambda.defining(), lambda);
    FieldElement lam = FieldElement::generator(ctx);
    FieldElement lam_inv = lam.inverse();
    return ZigZagMap(m, sign, std::move(ctx), std::move(lam), std::move(lam_inv));
}

const FieldElement& ZigZagMap::critical_point(int i) const {
    if (i < 1 || i > m_) throw input_error("critical point index out of range");
    return criticals_[i - 1];
}

int ZigZagMap::branch_index(const FieldElement& x) const {
    if (x.compare(Rat(0)) < 0 || x.compare(Rat(1)) > 0)
        throw input_error("point outside [0,1]");
    if (x.compare(Rat(1)) == 0) return m_;
    for (int i = 0; i < m_; ++i)
        if (x.compare(criticals_[i]) < 0) return i;
    return m_;
}

FieldElement ZigZagMap::apply_branch(int i, const FieldElement& x) const {
    if (i < 0 || i > m_) throw input_error("branch index out of range");
    if (branches_[i].rising) return lambda_ * x - constants_[i];
    return constants_[i] - lambda_ * x;
}

FieldElement ZigZagMap::evaluate(const FieldElement& x) const {
    return apply_branch(branch_index(x), x);
}

int ZigZagMap::default_orbit_cap() const {
    return std::max(32, 10 * ctx_->degree() * m_);
}

std::string to_string(PointTag tag) {
    switch (tag) {
        case PointTag::E: return "E";
        case PointTag::C: return "C";
        case PointTag::R: return "R";
        case PointTag::Pm2: return "P_{m-2}";
        case PointTag::Pm: return "P_m";
        case PointTag::Other: break;
    }
    return "other";
}

int PostcriticalData::label_of_one() const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].compare(Rat(1)) == 0)
            return label_base + static_cast<int>(i);
    throw verification_error("orbit does not contain 1");
}

const FieldElement& PostcriticalData::point(int label) const {
    int idx = label - label_base;
    if (idx < 0 || idx >= static_cast<int>(points.size()))
        throw input_error("label out of range");
    return points[idx];
}

int PostcriticalData::image_label(int label) const {
    int idx = label - label_base;
    if (idx < 0 || idx >= static_cast<int>(perm.size()))
        throw input_error("label out of range");
    return perm[idx];
}

std::variant<PostcriticalData, NotPeriodic> orbit_of_one(const ZigZagMap& f,
                                                         int max_steps) {
    if (max_steps <= 0) max_steps = f.default_orbit_cap();
    std::vector<FieldElement> seq;
    seq.push_back(FieldElement::one(f.context()));
    for (int step = 1; step <= max_steps; ++step) {
        FieldElement next = f.evaluate(seq.back());
        if (next.compare(Rat(1)) == 0) return assemble_orbit(f, seq);
        for (std::size_t j = 1; j < seq.size(); ++j) {
            if (next == seq[j])
                return NotPeriodic{step, true, static_cast<int>(j),
                                   step - static_cast<int>(j)};
        }
        seq.push_back(std::move(next));
    }
    return NotPeriodic{max_steps, false, 0, 0};
}

IntPoly digit_polynomial(const ZigZagMap& f, int max_steps) {
    if (max_steps <= 0) max_steps = f.default_orbit_cap();
    std::vector<FieldElement> seen;
    seen.push_back(FieldElement::one(f.context()));
    RatPoly g = RatPoly::constant(1);
    const RatPoly t = RatPoly::monomial(1);
    for (int step = 1; step <= max_steps; ++step) {
        const FieldElement& x = seen.back();
        int i = f.branch_index(x);
        const Branch& b = f.branches()[i];
        if (b.rising)
            g = t * g - RatPoly::constant(Rat(b.c));
        else
            g = RatPoly::constant(Rat(b.c)) - t * g;
        FieldElement next = f.apply_branch(i, x);
        if (next.compare(Rat(0)) == 0) return finish_digit_polynomial(f, g);
        if (next.compare(Rat(1)) == 0)
            return finish_digit_polynomial(f, g - RatPoly::constant(1));
        for (const FieldElement& s : seen)
            if (s == next) throw input_error("not PCP-boundary");
        seen.push_back(std::move(next));
    }
    throw undecided_error("orbit budget exhausted before reaching a boundary point");
}

std::vector<FieldElement> postcritical_set(const ZigZagMap& f) {
    std::vector<FieldElement> pc;
    std::vector<FieldElement> frontier;
    for (int i = 1; i <= f.m(); ++i) {
        FieldElement v = f.evaluate(f.critical_point(i));
        if (index_in_sorted(frontier, v) < 0) insert_sorted(frontier, v);
    }
    int budget = f.default_orbit_cap();
    while (!frontier.empty()) {
        FieldElement x = frontier.back();
        frontier.pop_back();
        if (!insert_sorted(pc, x)) continue;
        if (static_cast<int>(pc.size()) > budget)
            throw undecided_error("postcritical closure budget exhausted");
        frontier.push_back(f.evaluate(x));
    }
    return pc;
}

std::vector<FieldElement> markov_partition(const ZigZagMap& f,
                                           PartitionFlavor flavor) {
    std::vector<FieldElement> cuts = postcritical_set(f);
    insert_sorted(cuts, FieldElement::zero(f.context()));
    insert_sorted(cuts, FieldElement::one(f.context()));
    if (flavor == PartitionFlavor::weak)
        for (int i = 1; i <= f.m(); ++i) insert_sorted(cuts, f.critical_point(i));
    return cuts;
}

TransitionMatrix transition_matrix(const ZigZagMap& f, PartitionFlavor flavor) {
    std::vector<FieldElement> cuts = markov_partition(f, flavor);
    int d = static_cast<int>(cuts.size()) - 1;
    std::vector<std::vector<Int>> entries(d, std::vector<Int>(d, 0));
    for (int j = 0; j < d; ++j) {
        std::vector<FieldElement> pieces{cuts[j]};
        for (int i = 1; i <= f.m(); ++i) {
            const FieldElement& ci = f.critical_point(i);
            if (ci.compare(cuts[j]) > 0 && ci.compare(cuts[j + 1]) < 0)
                pieces.push_back(ci);
        }
        pieces.push_back(cuts[j + 1]);
        for (std::size_t p = 0; p + 1 < pieces.size(); ++p) {
            int br = f.branch_index(pieces[p]);
            FieldElement u = f.apply_branch(br, pieces[p]);
            FieldElement v = f.apply_branch(br, pieces[p + 1]);
            if (u.compare(v) > 0) std::swap(u, v);
            int lo = index_in_sorted(cuts, u);
            int hi = index_in_sorted(cuts, v);
            if (lo < 0 || hi < 0)
                throw verification_error(
                    "piece image endpoint is not a partition cut");
            for (int i = lo; i < hi; ++i) entries[i][j] += 1;
        }
    }
    return {flavor, std::move(cuts), std::move(entries)};
}

PartitionRelation partition_relation(const ZigZagMap& f) {
    PartitionRelation rel;
    rel.weak = transition_matrix(f, PartitionFlavor::weak);
    rel.postcritical = transition_matrix(f, PartitionFlavor::postcritical);
    rel.chi_weak = char_poly(rel.weak.entries);
    rel.chi_postcritical = char_poly(rel.postcritical.entries);
    rel.extra_cuts = static_cast<int>(rel.weak.cuts.size()) -
                     static_cast<int>(rel.postcritical.cuts.size());
    IntPoly expected = IntPoly::monomial(rel.extra_cuts) * rel.chi_postcritical;
    if (!(rel.chi_weak == expected))
        throw verification_error(
            "weak and postcritical characteristic polynomials do not differ "
            "by a power of t");
    return rel;
}

IntPoly char_poly(const std::vector<std::vector<Int>>& M) {
    int d = static_cast<int>(M.size());
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != d)
            throw input_error("matrix is not square");
    if (d == 0) return IntPoly::constant(1);
    // Values of det(x*I - M) at x = 0..d, then Lagrange interpolation.
    std::vector<Rat> nodes(d + 1), values(d + 1);
    for (int s = 0; s <= d; ++s) {
        std::vector<std::vector<Int>> a(d, std::vector<Int>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                a[i][j] = -M[i][j];
                if (i == j) a[i][j] += s;
            }
        nodes[s] = Rat(s);
        values[s] = Rat(bareiss_det(std::move(a)));
    }
    RatPoly chi;
    for (int s = 0; s <= d; ++s) {
        RatPoly basis = RatPoly::constant(1);
        Rat denom = 1;
        for (int r = 0; r <= d; ++r) {
            if (r == s) continue;
            basis = basis * RatPoly(std::vector<Rat>{-nodes[r], Rat(1)});
            denom *= nodes[s] - nodes[r];
        }
        chi += basis * (values[s] / denom);
    }
    IntPoly result = chi.clear_denominators();
    if (result.degree() != d || !result.is_monic() ||
        !(RatPoly(result) == chi))
        throw verification_error("characteristic polynomial is not integral monic");
    return result;
}

IntPoly char_poly(const TransitionMatrix& tm) { return char_poly(tm.entries); }

PrimitivityResult is_primitive(const std::vector<std::vector<Int>>& M) {
    require_nonnegative_square(M);
    int d = static_cast<int>(M.size());
    auto base = boolean_of(M);
    auto power = base;
    int bound = (d - 1) * (d - 1) + 1;
    for (int k = 1; k <= bound; ++k) {
        if (all_positive(power)) return {true, k};
        power = boolean_product(power, base);
    }
    return {false, 0};
}

PrimitivityResult is_primitive(const TransitionMatrix& tm) {
    return is_primitive(tm.entries);
}

PerronData perron_data(const std::vector<std::vector<Int>>& M) {
    require_nonnegative_square(M);
    int d = static_cast<int>(M.size());
    auto comps = strong_components(M);
    if (comps.size() > 1) {
        // Report a recurrent block: a component with no edges leaving it.
        for (const auto& block : comps) {
            bool closed = true;
            for (int u : block)
                for (int i = 0; i < d && closed; ++i)
                    if (M[i][u] > 0 &&
                        !std::binary_search(block.begin(), block.end(), i))
                        closed = false;
            if (!closed) continue;
            std::ostringstream os;
            os << "reducible transition matrix: recurrent block {";
            for (std::size_t i = 0; i < block.size(); ++i)
                os << (i ? "," : "") << block[i] + 1;
            os << "} has minor " << format_minor(M, block);
            throw input_error(os.str());
        }
        throw input_error("reducible transition matrix");
    }

    IntPoly chi = char_poly(M);
    AlgebraicReal root = perron_root(chi);
    FieldContextPtr ctx = FieldContext::make(chi, root);
    FieldElement lambda = FieldElement::generator(ctx);

    FieldMatrix A(d, FieldVector(d, FieldElement::zero(ctx)));
    FieldMatrix At(d, FieldVector(d, FieldElement::zero(ctx)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            FieldElement e = FieldElement::from_rat(ctx, Rat(M[i][j]));
            if (i == j) e -= lambda;
            A[i][j] = e;
            At[j][i] = std::move(e);
        }
    KernelResult right = kernel_vector(A);
    KernelResult left = kernel_vector(At);
    if (right.nullity != 1 || left.nullity != 1)
        throw verification_error("Perron eigenspace is not one-dimensional");

    FieldElement left_sum = sign_fixed_positive(left.v);
    sign_fixed_positive(right.v);
    for (auto& e : left.v) e /= left_sum;
    FieldElement dot = FieldElement::zero(ctx);
    for (int i = 0; i < d; ++i) dot += left.v[i] * right.v[i];
    for (auto& e : right.v) e /= dot;

    for (int i = 0; i < d; ++i) {
        FieldElement row = FieldElement::zero(ctx);
        FieldElement col = FieldElement::zero(ctx);
        for (int j = 0; j < d; ++j) {
            row += FieldElement::from_rat(ctx, Rat(M[i][j])) * right.v[j];
            col += left.v[j] * FieldElement::from_rat(ctx, Rat(M[j][i]));
        }
        if (row != lambda * right.v[i] || col != lambda * left.v[i])
            throw verification_error("Perron eigenvector identity failed");
    }

    PrimitivityResult prim = is_primitive(M);
    std::string warning =
        prim.primitive ? ""
                       : "matrix is irreducible but imprimitive; the Perron "
                         "root shares its modulus with other eigenvalues";
    return {std::move(ctx),  std::move(lambda),       std::move(left.v),
            std::move(right.v), prim.primitive, prim.power, std::move(warning)};
}

PerronData perron_data(const TransitionMatrix& tm) {
    return perron_data(tm.entries);
}

PerronNumeric perron_data_numeric(const std::vector<std::vector<Int>>& M,
                                  double tol, int max_iterations) {
    require_nonnegative_square(M);
    int d = static_cast<int>(M.size());
    // Shift by the identity so imprimitive cycles cannot make the iteration
    // oscillate; the eigenvectors are unchanged and the root shifts by 1.
    std::vector<std::vector<double>> B(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            B[i][j] = M[i][j].get_d() + (i == j ? 1.0 : 0.0);

    std::vector<double> v(d, 1.0 / d), u(d, 1.0 / d);
    double mu = 0.0;
    for (int it = 1; it <= max_iterations; ++it) {
        std::vector<double> nv(d, 0.0), nu(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                nv[i] += B[i][j] * v[j];
                nu[j] += u[i] * B[i][j];
            }
        double nv_sum = 0.0, nu_sum = 0.0;
        for (double e : nv) nv_sum += e;
        for (double e : nu) nu_sum += e;
        if (nv_sum <= 0.0 || nu_sum <= 0.0)
            throw undecided_error("power iteration collapsed to zero");
        double delta = 0.0;
        for (int i = 0; i < d; ++i) {
            nv[i] /= nv_sum;
            nu[i] /= nu_sum;
            delta = std::max(delta, std::abs(nv[i] - v[i]));
            delta = std::max(delta, std::abs(nu[i] - u[i]));
        }
        double mu_next = 0.0;
        for (int i = 0; i < d; ++i) {
            double image = 0.0;
            for (int j = 0; j < d; ++j) image += B[i][j] * nv[j];
            mu_next += image;
        }
        v = std::move(nv);
        u = std::move(nu);
        bool done = std::abs(mu_next - mu) <= tol * std::max(1.0, std::abs(mu_next)) &&
                    delta <= tol;
        mu = mu_next;
        if (done) {
            double dot = 0.0;
            for (int i = 0; i < d; ++i) dot += u[i] * v[i];
            if (dot != 0.0)
                for (double& e : v) e /= dot;
            return {mu - 1.0, std::move(u), std::move(v), it};
        }
    }
    throw undecided_error("power iteration did not converge");
}

PerronNumeric perron_data_numeric(const TransitionMatrix& tm, double tol,
                                  int max_iterations) {
    return perron_data_numeric(tm.entries, tol, max_iterations);
}

}  // namespace zzpa
