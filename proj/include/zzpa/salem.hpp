#pragma once

#include "zzpa/algebraic.hpp"
#include "zzpa/galois.hpp"
#include "zzpa/poly.hpp"

namespace zzpa {

// Digit polynomial of the genus-g family member (m, q) = (2, 1/(2g)):
// t^{2g+1} - 2t^{2g} - 2t + 1, cross-checked against the fraction pipeline.
IntPoly family_digit_poly(int g);

// Exact quotient family_digit_poly(g) / (t + 1), verified against the
// alternating closed form t^{2g} + 1 + 3 sum_{i=1..2g-1} (-1)^i t^i.
IntPoly d_poly(int g);

// Companion polynomial q_g with d_g(t) = t^g q_g(t + 1/t).
IntPoly companion_q(int g);

// Exact polynomial identity q_{g+2} = w q_{g+1} - q_g.
bool check_recurrence(int g);

// Roots of q_g and q_{g+1} in (-2, 2) strictly alternate:
// -2 < b_1 < a_1 < b_2 < ... < a_{g-1} < b_g < 2.
bool interlacing_check(int g);

// Everything the Salem certification of one genus produces. The booleans
// record each verified property; is_salem is their conjunction. A failed
// property leaves is_salem false but still emits the report.
struct SalemReport {
    int g;
    IntPoly D;  // digit polynomial
    IntPoly d;  // Salem factor D / (t+1)
    IntPoly q;  // companion of d
    bool cross_check_vs_classify;  // D matches the fraction pipeline
    bool reciprocal;               // d is palindromic
    bool recurrence_ok;            // q_g = w q_{g-1} - q_{g-2} (g >= 3)
    Int q_at_2;                    // always -1 in the family
    bool sign_q_at_minus2;         // (-1)^g q(-2) > 0
    int roots_in_critical_interval;  // roots of q in (-2,2), expect g-1
    int roots_above_two;             // expect exactly 1 (gives lambda)
    bool q_totally_real;             // all g roots of q are real
    bool interlaces_previous;        // roots of q_{g-1} interlace (g >= 3)
    bool cyclotomic_free;            // d has no cyclotomic factor
    int unit_circle_roots;           // 2 * roots_in_critical_interval
    AlgebraicReal lambda;            // largest root of d
    bool d_real_roots_ok;  // exactly two real roots, in (0,1) and (1,inf)
    bool degenerate;       // g = 1: degree 2, no roots on the circle
    bool geometry_ok;      // the built map is pA with the expected counts
    SingularityReport singularities;
    bool is_salem;
};

SalemReport salem_report(int g);

}  // namespace zzpa
