#pragma once

#include <iosfwd>
#include <optional>

#include "ltibound/kernel.hpp"
#include "ltibound/matrix.hpp"
#include "ltibound/minimal_polynomial.hpp"
#include "ltibound/moebius.hpp"

namespace ltibound {

enum class Mode { Continuous, Discrete };

/// Everything the decision produced, kept for traceability: the scaled
/// minimal polynomial, the polynomial actually handed to the kernel, the
/// disc-to-half-plane reduction when in discrete mode, the kernel verdict
/// with both sign-chain reports, plus per-stage wall-clock times and
/// intermediate bit-size observations.
struct DecisionReport {
    bool bounded = false;
    Mode mode = Mode::Continuous;

    ScaledMinimalPolynomial minimal_poly;
    IntPoly kernel_input;  // p (continuous) or the reduction output (discrete)
    std::optional<MoebiusResult> moebius;
    KernelVerdict kernel;

    long input_bits = 0;              // bit size of the rational input matrix
    bool denominator_ignored = false; // continuous mode with den > 1
    MinimalPolynomialStats minpoly_stats;

    double minpoly_ms = 0.0;
    double kernel_ms = 0.0;
    double total_ms = 0.0;
};

/// Bounded-trajectory decision for x' = A x: every eigenvalue in the open
/// left half plane, or on the axis with multiplicity one. The denominator of
/// a scales time only and is discarded (recorded in the report).
DecisionReport decide_continuous(const RatMatrix& a);

/// Bounded-trajectory decision for x(t+1) = A x(t): every eigenvalue inside
/// the open unit disc, or on the circle with multiplicity one. Works on the
/// denominator-cleared minimal polynomial and transports the disc condition
/// to the half plane.
DecisionReport decide_discrete(const RatMatrix& a);

/// Stable plain-text rendering of the report. Key order is fixed;
/// include_timings off gives byte-identical output for identical inputs.
void render_report(const DecisionReport& rep, std::ostream& os, bool include_timings);

/// Chain/verdict portion of the trace only (the part that exists even when
/// the input was a bare polynomial rather than a matrix).
void render_kernel_trace(const KernelVerdict& v, std::ostream& os);

}  // namespace ltibound
