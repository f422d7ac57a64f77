#pragma once

#include <vector>

#include "ltibound/matrix.hpp"
#include "ltibound/poly.hpp"

namespace ltibound::testkit {

/// Companion matrix of a monic polynomial x^d + c_1 x^{d-1} + ... + c_d,
/// d >= 1: ones on the subdiagonal, last column -c_d ... -c_1 top to bottom.
/// Its minimal and characteristic polynomials both equal p.
IntMatrix companion(const IntPoly& p);

IntMatrix block_diag(const std::vector<IntMatrix>& blocks);

}  // namespace ltibound::testkit
