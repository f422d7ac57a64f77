#pragma once

#include <optional>
#include <vector>

#include "ltibound/elimination.hpp"
#include "ltibound/matrix.hpp"

namespace ltibound {

/// A rational solution x = num / denom of an integer linear system, kept as
/// integers over a single nonzero denominator.
struct RationalSolution {
    Int denom;             // nonzero
    std::vector<Int> num;  // one numerator per unknown
};

/// Exact solve of a x = b over the rationals by Cramer determinants on the
/// pivot submatrix found by eliminate(). Returns nullopt iff the system is
/// infeasible; feasibility is decided by exact substitution of the candidate
/// into every equation, never by a heuristic. The solution is supported on
/// the pivot columns (all other unknowns are 0). max_entry_bits, when given,
/// accumulates the largest elimination iterate seen across the internal
/// eliminations (max with its incoming value).
std::optional<RationalSolution> solve(const IntMatrix& a, const std::vector<Int>& b,
                                      int* max_entry_bits = nullptr);

}  // namespace ltibound
