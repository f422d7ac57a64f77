#pragma once

#include <vector>

#include "ltibound/matrix.hpp"
#include "ltibound/poly.hpp"

namespace ltibound {

/// Integer multiple e0 * (monic minimal polynomial), e0 > 0:
/// e0 x^d + e1 x^{d-1} + ... + ed.
struct ScaledMinimalPolynomial {
    Int e0;
    std::vector<Int> tail;  // e1..ed

    int degree() const { return static_cast<int>(tail.size()); }
    IntPoly as_poly() const;
};

/// Observability counters for the annihilating-polynomial search.
struct MinimalPolynomialStats {
    int max_system_entry_bits = 0;  // entries of the stacked-power systems
    int max_solver_entry_bits = 0;  // elimination iterates inside the solves
};

/// Minimal polynomial of a square integer matrix, found by solving the
/// stacked linear systems "A^d in the span of A^{d-1},...,I" for d = 1..n
/// and keeping the first feasible degree. The result is verified to
/// annihilate a before it is returned.
ScaledMinimalPolynomial minimal_polynomial(const IntMatrix& a,
                                           MinimalPolynomialStats* stats = nullptr);

}  // namespace ltibound
