#include "ltibound/elimination.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ltibound {

namespace {

// Parity of the permutation taking the ascending order of seq's first r
// entries to their stored order: +1/-1 by inversion count.
int inversion_parity(const std::vector<int>& seq, int r) {
    int inv = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

EliminationResult eliminate(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    IntMatrix w = a;
    std::vector<int> rowp(m), colp(n);  // position -> original index
    std::iota(rowp.begin(), rowp.end(), 0);
    std::iota(colp.begin(), colp.end(), 0);

    EliminationResult res;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            res.max_entry_bits = std::max(res.max_entry_bits, bit_size(w.at(i, j)));

    Int prev = 1;  // pivot of the previous step; divisor of the current one
    int k = 0;
    for (; k < std::min(m, n); ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < m && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (w.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;  // remaining block is zero
        if (pi != k) {
            for (int j = 0; j < n; ++j) swap(w.at(pi, j), w.at(k, j));
            std::swap(rowp[pi], rowp[k]);
        }
        if (pj != k) {
            for (int i = 0; i < m; ++i) swap(w.at(i, pj), w.at(i, k));
            std::swap(colp[pj], colp[k]);
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(k, k) * w.at(i, j) - w.at(k, j) * w.at(i, k);
                w.at(i, j) = exact_div(t, prev);
                res.max_entry_bits = std::max(res.max_entry_bits, bit_size(w.at(i, j)));
            }
        prev = w.at(k, k);
    }

    res.rank = k;
    res.row_set.assign(rowp.begin(), rowp.begin() + k);
    res.col_set.assign(colp.begin(), colp.begin() + k);
    res.parity = inversion_parity(rowp, k) * inversion_parity(colp, k);
    std::sort(res.row_set.begin(), res.row_set.end());
    std::sort(res.col_set.begin(), res.col_set.end());
    // The final pivot equals the determinant of the submatrix in pivot order;
    // re-sign it to the ascending order reported in row_set/col_set.
    res.minor = k == 0 ? Int(1) : Int(res.parity * prev);
    return res;
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
    if (a.rows() == 0) return 1;
    EliminationResult r = eliminate(a);
    if (r.rank < a.rows()) return 0;
    return r.minor;
}

}  // namespace ltibound
