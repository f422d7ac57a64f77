#include "ltibound/testkit/companion.hpp"

#include <stdexcept>

namespace ltibound::testkit {

IntMatrix companion(const IntPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("companion: need degree >= 1");
    if (p.leading() != 1) throw std::invalid_argument("companion: polynomial must be monic");
    IntMatrix c(d, d);
    for (int i = 1; i < d; ++i) c.at(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) c.at(i, d - 1) = -p.coeff(i);  // -c_{d-i}
    return c;
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
    int n = 0;
    for (const IntMatrix& b : blocks) {
        if (!b.is_square()) throw std::invalid_argument("block_diag: blocks must be square");
        n += b.rows();
    }
    IntMatrix m(n, n);
    int off = 0;
    for (const IntMatrix& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

}  // namespace ltibound::testkit
