#pragma once

#include <optional>
#include <vector>

#include "ltibound/matrix.hpp"
#include "ltibound/poly.hpp"
#include "ltibound/scalar.hpp"

namespace ltibound::testkit {

/// Determinant by Laplace cofactor expansion; independent of the
/// fraction-free path. Exponential, guarded to n <= 7.
Int cofactor_det_oracle(const IntMatrix& a);

/// Plain rational Gaussian elimination with the same pivot policy as the
/// fraction-free path (first nonzero of the remaining block, row-major):
/// rank plus ascending pivot row/column sets.
struct RowReduction {
    int rank = 0;
    std::vector<int> row_set, col_set;
};
RowReduction rational_row_reduce(const IntMatrix& a);

/// Reference rational solve (Gaussian elimination, free unknowns zero);
/// nullopt iff infeasible.
std::optional<std::vector<Rat>> rational_solve(const IntMatrix& a, const std::vector<Int>& b);

/// Gaussian rational re + im*i, enough arithmetic to evaluate polynomials
/// at complex rational points exactly.
struct GaussRat {
    Rat re, im;

    bool operator==(const GaussRat&) const = default;
    friend GaussRat operator+(const GaussRat& x, const GaussRat& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
};

GaussRat eval_gauss(const IntPoly& p, const GaussRat& z);

}  // namespace ltibound::testkit
