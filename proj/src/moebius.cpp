#include "ltibound/moebius.hpp"

#include <stdexcept>

namespace ltibound {

MoebiusResult moebius_transform(const IntPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("moebius_transform: need degree >= 1");

    std::vector<IntPoly> plus(static_cast<size_t>(d) + 1);   // (x+1)^k
    std::vector<IntPoly> minus(static_cast<size_t>(d) + 1);  // (x-1)^k
    plus[0] = minus[0] = IntPoly{1};
    const IntPoly xp1{1, 1}, xm1{1, -1};
    for (int k = 1; k <= d; ++k) {
        plus[static_cast<size_t>(k)] = plus[static_cast<size_t>(k - 1)] * xp1;
        minus[static_cast<size_t>(k)] = minus[static_cast<size_t>(k - 1)] * xm1;
    }

    MoebiusResult res;
    for (int l = 0; l <= d; ++l) {
        Int a = p.coeff(d - l);
        if (a == 0) continue;
        res.transformed =
            res.transformed + a * (plus[static_cast<size_t>(d - l)] * minus[static_cast<size_t>(l)]);
    }
    // deg P < d exactly when 1 is a root of p; the drop equals its multiplicity.
    res.delta = d - res.transformed.degree();
    res.output = res.delta <= 1 ? res.transformed : IntPoly{1, 0, 0};
    return res;
}

}  // namespace ltibound
