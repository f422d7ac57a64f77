#include "ltibound/scalar.hpp"

#include <stdexcept>

namespace ltibound {

int bit_size(const Int& a) {
    if (a == 0) return 1;
    // mpz_sizeinbase(|a|, 2) = floor(log2 |a|) + 1 = ceil(log2(|a|+1)) for a != 0.
    return static_cast<int>(mpz_sizeinbase(a.get_mpz_t(), 2)) + 1;
}

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::logic_error("exact_div: zero divisor");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: division left a remainder");
    return q;
}

}  // namespace ltibound
