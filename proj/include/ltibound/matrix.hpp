#pragma once

#include <initializer_list>
#include <vector>

#include "ltibound/scalar.hpp"

namespace ltibound {

/// Dense matrix of arbitrary-precision integers, row-major storage.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);  // zero-filled
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;
    /// Submatrix picked by explicit row/column index lists, in the order given.
    IntMatrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const;
    /// Copy with column j replaced by col (used for Cramer determinants).
    IntMatrix with_column(int j, const std::vector<Int>& col) const;
    /// Columns stacked top to bottom into one vector of length rows*cols.
    std::vector<Int> column_stack() const;

    bool operator==(const IntMatrix&) const = default;

    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator*(const Int& c, const IntMatrix& x);
    IntMatrix operator-() const;

  private:
    int rows_, cols_;
    std::vector<Int> data_;
};

/// Sum of bit_size over all entries.
long bit_size(const IntMatrix& a);

/// Rational matrix num/den with den > 0 enforced at construction.
struct RatMatrix {
    IntMatrix num;
    Int den;

    RatMatrix(IntMatrix b, Int q);
};

long bit_size(const RatMatrix& a);

}  // namespace ltibound
