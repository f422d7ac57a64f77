#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltibound/matrix.hpp"
#include "ltibound/poly.hpp"

namespace ltibound {

enum class Parity { Even, Odd };

/// Real/imaginary split of p along the imaginary axis. For even d,
/// p(ix) = p0(x) + i p1(x); for odd d, i*p(ix) = p0(x) + i p1(x). Both parts
/// are real with integer coefficients. p0 occupies exponents d, d-2, ...;
/// p1 the complementary parity starting at d-1. f = floor(d/2), so p0 has
/// f+1 coefficient slots and p1 has d+1-(f+1) slots.
struct HurwitzPair {
    IntPoly p0;
    IntPoly p1;
    int d = 0;
    int f = 0;
    Parity parity = Parity::Even;
};

/// Requires deg p >= 1. The split multiplies coefficient c_k by a power of i
/// and reassigns it to p0 or p1 by the parity of k.
HurwitzPair decompose(const IntPoly& p);

/// (d+1)x(d+1) resultant-style scheme for the pair: with the coefficient
/// slots of p0 and p1 interleaved into one sequence t_0..t_d (t_{2c} = slot c
/// of p0, t_{2c+1} = slot c of p1), entry (r,c) is t_{2c-r-1} in 1-indexed
/// terms and zero outside the range. Built for any pair whose slot layout is
/// step-two from degrees d and d-1; p1 may be identically zero only at the
/// caller's peril (use the m=0 shortcut instead).
IntMatrix hurwitz_matrix(const HurwitzPair& pair);

/// How the leading-minor scan terminated.
///  - AllNonzeroMinors: every leading principal minor 1..d+1 was nonzero.
///  - S1: first zero minor at order k+1 and all probe minors vanish too --
///    the underlying remainder chain simply ended at index m = k-1.
///  - S2: first zero minor at order k+1 but some probe minor is nonzero --
///    the chain drops degree by more than one, which certifies a failure.
///  - NotStepOne: synthesized by the caller when deg p1 < d-1 from the start.
enum class ChainStatus { AllNonzeroMinors, S1, S2, NotStepOne };

/// Signs of the leading coefficients of the polynomial remainder chain,
/// recovered from exact minors without ever forming the chain itself.
/// leading_signs[k] is the sign of the k-th chain polynomial's leading
/// coefficient; it has length m+1 and never contains zeros. leading_minors
/// records each leading principal minor actually computed (orders 1..);
/// max_entry_bits the largest elimination iterate across all of them.
struct SignChainReport {
    ChainStatus status = ChainStatus::AllNonzeroMinors;
    int m = 0;
    std::vector<int> leading_signs;
    std::vector<Int> leading_minors;
    int max_entry_bits = 0;
};

/// Scan the leading principal minors of the scheme matrix for a degree-d
/// pair (f = floor(d/2)); on the first zero minor, probe the off-diagonal
/// column replacements to distinguish S1 from S2.
SignChainReport chain_signs(const IntMatrix& M, int d, int f);

/// The m-th chain polynomial scaled by |product of leading coefficients
/// 0..m-1|: an integer-coefficient polynomial proportional (by a positive
/// factor) to the gcd part that the chain terminated on. Step-two support in
/// exponents d-m, d-m-2, ...
IntPoly extract_pm(const IntMatrix& M, int m, int d, int f);

/// Full verdict with the evidence that produced it. ext is engaged only when
/// the first phase ends early (m < d); p_ext0 is the polynomial handed to
/// the second phase (zero when the decision fell before extraction).
/// failing_condition is empty exactly when bounded.
struct KernelVerdict {
    bool bounded = false;
    SignChainReport phase1;
    std::optional<SignChainReport> ext;
    IntPoly p_ext0;
    std::string failing_condition;
    int max_entry_bits = 0;
};

/// Decides: all complex roots of p have negative real part, or zero real
/// part with multiplicity one. Exact in every step. Requires p != 0;
/// constants are vacuously bounded.
KernelVerdict has_boundedness_property(const IntPoly& p);

}  // namespace ltibound
