#include "ltibound/testkit/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ltibound::testkit {

namespace {

Int cofactor_rec(const IntMatrix& a, std::vector<int>& cols, int row) {
    if (cols.empty()) return 1;
    Int acc = 0;
    for (size_t k = 0; k < cols.size(); ++k) {
        const Int& v = a.at(row, cols[k]);
        if (v == 0) continue;
        int c = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        Int sub = cofactor_rec(a, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(k), c);
        if (k % 2 == 0)
            acc += v * sub;
        else
            acc -= v * sub;
    }
    return acc;
}

}  // namespace

Int cofactor_det_oracle(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("cofactor_det_oracle: matrix not square");
    if (a.rows() > 7) throw std::invalid_argument("cofactor_det_oracle: n > 7");
    std::vector<int> cols(static_cast<size_t>(a.cols()));
    std::iota(cols.begin(), cols.end(), 0);
    return cofactor_rec(a, cols, 0);
}

RowReduction rational_row_reduce(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    std::vector<std::vector<Rat>> w(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(n)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.at(i, j);
    std::vector<int> rowp(static_cast<size_t>(m)), colp(static_cast<size_t>(n));
    std::iota(rowp.begin(), rowp.end(), 0);
    std::iota(colp.begin(), colp.end(), 0);

    int k = 0;
    for (; k < std::min(m, n); ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < m && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (w[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(w[static_cast<size_t>(pi)], w[static_cast<size_t>(k)]);
        std::swap(rowp[static_cast<size_t>(pi)], rowp[static_cast<size_t>(k)]);
        if (pj != k) {
            for (int i = 0; i < m; ++i)
                std::swap(w[static_cast<size_t>(i)][static_cast<size_t>(pj)],
                          w[static_cast<size_t>(i)][static_cast<size_t>(k)]);
            std::swap(colp[static_cast<size_t>(pj)], colp[static_cast<size_t>(k)]);
        }
        for (int i = k + 1; i < m; ++i) {
            Rat f = w[static_cast<size_t>(i)][static_cast<size_t>(k)] /
                    w[static_cast<size_t>(k)][static_cast<size_t>(k)];
            for (int j = k; j < n; ++j)
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * w[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    }
    RowReduction r;
    r.rank = k;
    r.row_set.assign(rowp.begin(), rowp.begin() + k);
    r.col_set.assign(colp.begin(), colp.begin() + k);
    std::sort(r.row_set.begin(), r.row_set.end());
    std::sort(r.col_set.begin(), r.col_set.end());
    return r;
}

std::optional<std::vector<Rat>> rational_solve(const IntMatrix& a, const std::vector<Int>& b) {
    const int m = a.rows(), n = a.cols();
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("rational_solve: length mismatch");
    // Augmented rational elimination, rows swapped only (columns tracked by
    // explicit pivot positions).
    std::vector<std::vector<Rat>> w(static_cast<size_t>(m),
                                    std::vector<Rat>(static_cast<size_t>(n) + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.at(i, j);
        w[static_cast<size_t>(i)][static_cast<size_t>(n)] = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pr = -1;
        for (int i = row; i < m; ++i)
            if (w[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(w[static_cast<size_t>(pr)], w[static_cast<size_t>(row)]);
        for (int i = 0; i < m; ++i) {
            if (i == row || w[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
            Rat f = w[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                    w[static_cast<size_t>(row)][static_cast<size_t>(col)];
            for (int j = col; j <= n; ++j)
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * w[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (w[static_cast<size_t>(i)][static_cast<size_t>(n)] != 0) return std::nullopt;

    std::vector<Rat> x(static_cast<size_t>(n), Rat(0));
    for (size_t r = 0; r < pivot_col.size(); ++r)
        x[static_cast<size_t>(pivot_col[r])] =
            w[r][static_cast<size_t>(n)] / w[r][static_cast<size_t>(pivot_col[r])];
    return x;
}

GaussRat eval_gauss(const IntPoly& p, const GaussRat& z) {
    GaussRat acc{0, 0};
    for (const Int& c : p.coeffs()) acc = acc * z + GaussRat{Rat(c), Rat(0)};
    return acc;
}

}  // namespace ltibound::testkit
