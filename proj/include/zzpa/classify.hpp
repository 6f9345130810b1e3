#pragma once

#include <string>
#include <vector>

#include "zzpa/poly.hpp"
#include "zzpa/zigzag.hpp"

namespace zzpa {

// Permutation of the labels base, base+1, ..., base+size-1 in one-row
// notation: image[i] is the image of label base+i.
struct Permutation {
    int base = 1;
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    int of(int label) const;
    Permutation inverse() const;
    bool is_full_cycle() const;
    bool operator==(const Permutation&) const = default;
};

// Validates that image is a bijection of the label range.
Permutation make_permutation(int base, std::vector<int> image);

// The orbit permutation families, by modality: even m >= 4 gives rho_e on
// {1..n} (1 -> n, i -> i+n-k for 2 <= i <= k-1, i -> i-(k-1) for i >= k),
// odd m gives rho_o on {0..n} (0 -> n, 1 -> 0, the rest as rho_e), and
// m = 2 gives the conjugate tau^-1 rho_e tau by the cycle tau = (1 2 ... k-1).
// Requires n >= 3 and 2 <= k <= n-1.
Permutation rho_family(int m, int n, int k);

// Whether the family permutation on parameters (n, k) is one full cycle.
bool is_full_cycle(int n, int k);

// A reduced fraction a/b with 0 < a < b, the value of the invariant Phi.
// The corresponding orbit parameters are n = b+1, k = n-a.
struct FractionLabel {
    Int a;
    Int b;

    FractionLabel(Int a, Int b);
    static FractionLabel parse(const std::string& text);  // "a/b"

    int n() const;
    int k() const;
    std::string to_string() const;
    bool operator==(const FractionLabel&) const = default;
};

// Digit polynomial of the standard map with invariant q in modality m >= 2,
// by the closed form: t^{b+1} + 1 - sum c_i t^{b+1-i}, where c_i = m exactly
// when the line (a/b) t passes through an integer height over [i-1, i] and
// c_i = m - 2 otherwise.
IntPoly digit_poly_from_fraction(int m, const FractionLabel& q);

// Interval tags of the sorted orbit points for the standard family member
// with parameters (m, n, k).
std::vector<PointTag> expected_taxonomy(int m, int n, int k);

// A standard map built from its invariant, with every claimed property of
// the family checked exactly: growth rate in (m, m+1), orbit periodic with
// the family period, permutation and taxonomy as predicted, digit polynomial
// equal to the closed form and reciprocal, and phi inverting the build.
struct BuiltMap {
    ZigZagMap map;
    PostcriticalData orbit;
    FractionLabel label;
    IntPoly closed_form;
};

BuiltMap build_zigzag(int m, const FractionLabel& q);

// Reads the invariant Phi = (n-k)/(n-1) off a postcritical orbit by locating
// the orbit permutation inside the rho families. Orbits outside the families
// (in particular cycles of length < 3 over base 1) raise input_error.
FractionLabel phi(const PostcriticalData& orbit);

// The nonstandard map with sign -(-1)^m and quadratic growth rate, the
// Perron root of t^2 - (m+1)t + 1. The postcritical orbit is 1 -> 1/lambda
// -> 1 for odd m and 1 -> 1/lambda -> 0 -> 1 for even m, checked exactly
// along with the context's minimal polynomial.
struct QuadMap {
    ZigZagMap map;
    PostcriticalData orbit;
    IntPoly defining;
};

QuadMap quad_nonstandard(int m);

}  // namespace zzpa
