#pragma once

#include "ltibound/poly.hpp"

namespace ltibound {

/// Unit-disc-to-left-half-plane transport of a polynomial's root condition.
/// transformed is P(x) = sum_l a_l (x+1)^{d-l} (x-1)^l for input
/// sum_l a_l x^{d-l}; delta = d - deg P is the multiplicity of 1 as a root
/// of the input. output is what the half-plane kernel should be run on:
/// P itself when delta <= 1, else the fixed witness x^2 (a root 1 of
/// multiplicity >= 2 lies on the unit circle and already settles the answer).
struct MoebiusResult {
    IntPoly transformed;
    int delta = 0;
    IntPoly output;
};

/// Requires deg p >= 1. Expansion uses one running table of (x+1)^k and
/// (x-1)^k (Pascal's rows with signs), all arithmetic exact.
MoebiusResult moebius_transform(const IntPoly& p);

}  // namespace ltibound
