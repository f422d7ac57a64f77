#include "ltibound/testkit/unimodular.hpp"

#include <stdexcept>

namespace ltibound::testkit {

namespace {

bool within_cap(const IntMatrix& m, long cap) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (abs(m.at(i, j)) > cap) return false;
    return true;
}

}  // namespace

std::pair<IntMatrix, IntMatrix> unimodular(TestRng& rng, int n, int ops, long cap) {
    if (n < 1) throw std::invalid_argument("unimodular: n < 1");
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);  // v = u^{-1} throughout

    for (int t = 0; t < ops; ++t) {
        int what = static_cast<int>(rng.range(0, 9));
        if (what <= 6 && n >= 2) {
            // u <- (row j += c * row i) u has inverse col op: v col i -= c * col j.
            int i = static_cast<int>(rng.range(0, n - 1));
            int j = static_cast<int>(rng.range(0, n - 1));
            if (i == j) continue;
            Int c(rng.nonzero(3));
            IntMatrix u2 = u, v2 = v;
            for (int k = 0; k < n; ++k) u2.at(j, k) += c * u2.at(i, k);
            for (int k = 0; k < n; ++k) v2.at(k, i) -= c * v2.at(k, j);
            if (within_cap(u2, cap) && within_cap(v2, cap)) {
                u = std::move(u2);
                v = std::move(v2);
            }
        } else if (what <= 8 && n >= 2) {
            int i = static_cast<int>(rng.range(0, n - 1));
            int j = static_cast<int>(rng.range(0, n - 1));
            if (i == j) continue;
            for (int k = 0; k < n; ++k) swap(u.at(i, k), u.at(j, k));
            for (int k = 0; k < n; ++k) swap(v.at(k, i), v.at(k, j));
        } else {
            int i = static_cast<int>(rng.range(0, n - 1));
            for (int k = 0; k < n; ++k) u.at(i, k) = -u.at(i, k);
            for (int k = 0; k < n; ++k) v.at(k, i) = -v.at(k, i);
        }
    }
    return {std::move(u), std::move(v)};
}

}  // namespace ltibound::testkit
