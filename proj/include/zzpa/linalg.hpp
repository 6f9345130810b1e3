#pragma once

#include <vector>

#include "zzpa/field.hpp"

namespace zzpa {

using FieldVector = std::vector<FieldElement>;
using FieldMatrix = std::vector<std::vector<FieldElement>>;

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveStatus status;
    FieldVector x;  // filled only for status == unique
};

// Exact Gaussian elimination for A x = b. Extra rows are fine; they are
// checked for consistency. status == unique requires full column rank.
SolveResult solve_linear(FieldMatrix A, FieldVector b);

struct KernelResult {
    int nullity;
    FieldVector v;  // a nonzero kernel vector, filled only when nullity == 1
};

// Kernel of a square matrix.
KernelResult kernel_vector(FieldMatrix A);

}  // namespace zzpa
