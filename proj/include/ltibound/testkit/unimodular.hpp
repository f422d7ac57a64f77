#pragma once

#include <utility>

#include "ltibound/matrix.hpp"
#include "ltibound/testkit/rng.hpp"

namespace ltibound::testkit {

/// Random unimodular matrix (determinant +-1) together with its exact
/// inverse, accumulated from elementary row operations. Any operation that
/// would push an entry of either factor beyond |cap| is skipped, keeping
/// conjugated test matrices well-conditioned in bit size.
std::pair<IntMatrix, IntMatrix> unimodular(TestRng& rng, int n, int ops, long cap);

}  // namespace ltibound::testkit
