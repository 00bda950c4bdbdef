#pragma once

/**
 * Exact linear algebra over Q(sqrt(D)): reduced row echelon form, affine
 * solution sets (particular solution + nullspace basis), and rank.
 */

#include <optional>
#include <vector>

#include "bidiff/qelem.hpp"

namespace bidiff {

using QVector = std::vector<QElem>;
using QMatrix = std::vector<QVector>;

struct AffineSolution {
    std::optional<QVector> particular;  // absent iff the system is inconsistent
    std::vector<QVector> nullspace_basis;
};

// Solves matrix * x = rhs exactly by fraction-aware Gaussian elimination.
// The particular solution has all free variables set to zero; the nullspace
// basis has one vector per free column (unit in that coordinate).
AffineSolution linsolve(QMatrix matrix, QVector rhs);

// Rank of the matrix (exact).
std::size_t rank(QMatrix matrix);

}  // namespace bidiff
