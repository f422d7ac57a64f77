#pragma once

#include <gmpxx.h>

namespace ltibound {

using Int = mpz_class;
using Rat = mpq_class;

/// Bits needed to store a signed value: ceil(log2(|a|+1)) + 1.
/// bit_size(0) == 1, bit_size(1) == 2, bit_size(-3) == 3.
int bit_size(const Int& a);

/// Quotient a/b when b divides a exactly. Exactness is an invariant of every
/// caller (fraction-free elimination), so a nonzero remainder is a logic
/// error, not an input condition.
Int exact_div(const Int& a, const Int& b);

inline int sign_of(const Int& a) { return sgn(a); }

}  // namespace ltibound
