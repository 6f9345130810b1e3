#pragma once

#include <string>
#include <variant>
#include <vector>

#include "zzpa/algebraic.hpp"
#include "zzpa/field.hpp"
#include "zzpa/poly.hpp"

namespace zzpa {

// One affine branch: x -> lambda*x - c when rising, x -> c - lambda*x when
// falling. Branch i carries c = i (rising) or c = i + 1 (falling), so the
// branch maps its interval [i/lambda, (i+1)/lambda] onto [0, 1].
struct Branch {
    bool rising = false;
    Int c = 0;
};

// Piecewise affine self-map of [0, 1] with slopes +-lambda, critical points
// c_i = i/lambda for 1 <= i <= m where m = floor(lambda), and critical values
// in {0, 1}. Branch i is taken on [c_i, c_{i+1}) (the last interval is closed
// on the right). Sign +1 means f(0) = 0, sign -1 means f(0) = 1; branch
// directions alternate from there. The map is standard when sign = (-1)^m.
class ZigZagMap {
  public:
    // Requires m >= 1, sign in {+1, -1}, and m < lambda < m + 1 strictly.
    static ZigZagMap make(int m, int sign, const AlgebraicReal& lambda);

    int m() const { return m_; }
    int sign() const { return sign_; }
    bool standard() const { return (m_ % 2 == 0) == (sign_ > 0); }
    const FieldContextPtr& context() const { return ctx_; }
    const FieldElement& lambda() const { return lambda_; }
    const FieldElement& lambda_inv() const { return lambda_inv_; }
    const std::vector<Branch>& branches() const { return branches_; }

    // c_i = i/lambda for 1 <= i <= m.
    const FieldElement& critical_point(int i) const;

    // Index of the branch acting at x, for x in [0, 1]; critical points
    // belong to the branch on their right.
    int branch_index(const FieldElement& x) const;

    FieldElement apply_branch(int i, const FieldElement& x) const;
    FieldElement evaluate(const FieldElement& x) const;

    // Step budget used by the orbit walks when the caller passes none.
    int default_orbit_cap() const;

  private:
    ZigZagMap(int m, int sign, FieldContextPtr ctx, FieldElement lambda,
              FieldElement lambda_inv);

    int m_;
    int sign_;
    FieldContextPtr ctx_;
    FieldElement lambda_;
    FieldElement lambda_inv_;
    std::vector<Branch> branches_;
    std::vector<FieldElement> criticals_;
    std::vector<FieldElement> constants_;  // branch constants as field elements
};

// Interval membership tags for postcritical points: endpoints, the first
// critical point, and the intervals I_{m-1}, I_{m-2}, I_m; anything else
// (including critical points c_j with j >= 2) is tagged other.
enum class PointTag { E, C, R, Pm2, Pm, Other };

std::string to_string(PointTag tag);

// The cycle of 1, sorted and labeled. Labels run upward from label_base,
// which is 0 exactly when 0 lies on the cycle and 1 otherwise.
struct PostcriticalData {
    int label_base = 1;
    std::vector<FieldElement> points;  // ascending; the largest is 1
    std::vector<int> perm;             // perm[i] = label of f(points[i])
    int period = 0;
    std::vector<PointTag> taxonomy;

    int label_of_one() const;
    const FieldElement& point(int label) const;
    int image_label(int label) const;
};

// Orbit walk outcome when 1 does not return to itself: either the orbit
// entered a cycle avoiding 1, or the step budget ran out first.
struct NotPeriodic {
    int steps = 0;
    bool eventually_periodic = false;
    int preperiod = 0;
    int cycle_length = 0;
};

// Walks 1, f(1), f^2(1), ... with exact arithmetic until the orbit returns
// to 1 or repeats elsewhere. max_steps <= 0 uses the map's default cap.
std::variant<PostcriticalData, NotPeriodic> orbit_of_one(const ZigZagMap& f,
                                                         int max_steps = 0);

// Monic integer polynomial vanishing at lambda, built by composing the
// branch substitutions g -> t*g - c or g -> c - t*g along the orbit of 1
// until the orbit first hits {0, 1}. Throws input_error("not PCP-boundary")
// when the orbit closes up without touching the boundary.
IntPoly digit_polynomial(const ZigZagMap& f, int max_steps = 0);

enum class PartitionFlavor { weak, postcritical };

// Forward-orbit closure of the critical values f(c_1), ..., f(c_m),
// ascending. Finite exactly when the map is postcritically finite.
std::vector<FieldElement> postcritical_set(const ZigZagMap& f);

// Partition cut points, ascending: {0, 1} and the postcritical set, plus
// every critical point for the weak flavor.
std::vector<FieldElement> markov_partition(
    const ZigZagMap& f, PartitionFlavor flavor = PartitionFlavor::weak);

struct TransitionMatrix {
    PartitionFlavor flavor = PartitionFlavor::weak;
    std::vector<FieldElement> cuts;
    // entries[i][j] counts how often f(cell j) covers cell i.
    std::vector<std::vector<Int>> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

TransitionMatrix transition_matrix(
    const ZigZagMap& f, PartitionFlavor flavor = PartitionFlavor::weak);

// The two transition matrices of the same map and their characteristic
// polynomials, which agree up to the factor t^extra_cuts (checked exactly).
struct PartitionRelation {
    TransitionMatrix weak;
    TransitionMatrix postcritical;
    IntPoly chi_weak;
    IntPoly chi_postcritical;
    int extra_cuts = 0;
};

PartitionRelation partition_relation(const ZigZagMap& f);

// det(t*I - M) by fraction-free integer determinants at t = 0..d and
// Lagrange interpolation; the result is checked to be monic and integral.
IntPoly char_poly(const std::vector<std::vector<Int>>& M);
IntPoly char_poly(const TransitionMatrix& tm);

struct PrimitivityResult {
    bool primitive = false;
    int power = 0;  // least k with M^k entrywise positive, when primitive
};

// Boolean power scan up to the Wielandt bound (d-1)^2 + 1.
PrimitivityResult is_primitive(const std::vector<std::vector<Int>>& M);
PrimitivityResult is_primitive(const TransitionMatrix& tm);

// Exact Perron eigendata of an irreducible nonnegative integer matrix. The
// field is generated by the Perron root of the characteristic polynomial;
// left is normalized to sum 1 and right to <left, right> = 1, both strictly
// positive, and the eigenvector identities are verified exactly. Reducible
// input raises input_error naming a recurrent block and its minor.
struct PerronData {
    FieldContextPtr ctx;
    FieldElement lambda;
    std::vector<FieldElement> left;
    std::vector<FieldElement> right;
    bool primitive = false;
    int primitivity_power = 0;
    std::string warning;  // set when irreducible but imprimitive
};

PerronData perron_data(const std::vector<std::vector<Int>>& M);
PerronData perron_data(const TransitionMatrix& tm);

// Floating-point counterpart by shifted power iteration; no irreducibility
// gate, so reducible input converges to a dominant block instead of failing.
struct PerronNumeric {
    double lambda = 0.0;
    std::vector<double> left;
    std::vector<double> right;
    int iterations = 0;
};

PerronNumeric perron_data_numeric(const std::vector<std::vector<Int>>& M,
                                  double tol = 1e-12,
                                  int max_iterations = 100000);
PerronNumeric perron_data_numeric(const TransitionMatrix& tm,
                                  double tol = 1e-12,
                                  int max_iterations = 100000);

}  // namespace zzpa
