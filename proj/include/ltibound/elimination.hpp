#pragma once

#include <vector>

#include "ltibound/matrix.hpp"

namespace ltibound {

/// Outcome of fraction-free (Bareiss) elimination.
///
/// row_set/col_set are the pivot index sets in ascending order. minor is the
/// exact determinant of a[row_set, col_set] taken in that ascending order:
/// the permutation parity picked up while pivoting is already folded in, and
/// is also reported separately as parity. For rank 0 the minor is 1 (empty
/// product). max_entry_bits tracks the largest bit size among all elimination
/// iterates, which are themselves minors of a.
struct EliminationResult {
    int rank = 0;
    std::vector<int> row_set;
    std::vector<int> col_set;
    Int minor = 1;
    int parity = 1;
    int max_entry_bits = 0;
};

/// One-step division-free elimination: every division is exact by
/// construction and asserted. Pivot selection scans the remaining block in
/// row-major order for the first nonzero entry.
EliminationResult eliminate(const IntMatrix& a);

/// Determinant of a square matrix via eliminate(); 0 when rank-deficient.
Int determinant(const IntMatrix& a);

}  // namespace ltibound
