#include "ltibound/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ltibound {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    data_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    IntMatrix s(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = at(rs[i], cs[j]);
    return s;
}

IntMatrix IntMatrix::with_column(int j, const std::vector<Int>& col) const {
    if (static_cast<int>(col.size()) != rows_)
        throw std::invalid_argument("with_column: length mismatch");
    IntMatrix m = *this;
    for (int i = 0; i < rows_; ++i) m.at(i, j) = col[i];
    return m;
}

std::vector<Int> IntMatrix::column_stack() const {
    std::vector<Int> v;
    v.reserve(static_cast<size_t>(rows_) * cols_);
    for (int j = 0; j < cols_; ++j)
        for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

static void check_same_shape(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("IntMatrix: shape mismatch");
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    check_same_shape(x, y);
    IntMatrix r(x.rows_, x.cols_);
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = x.data_[k] + y.data_[k];
    return r;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    check_same_shape(x, y);
    IntMatrix r(x.rows_, x.cols_);
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = x.data_[k] - y.data_[k];
    return r;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("IntMatrix: inner dimension mismatch");
    IntMatrix r(x.rows_, y.cols_);
    Int acc;
    for (int i = 0; i < x.rows_; ++i)
        for (int j = 0; j < y.cols_; ++j) {
            acc = 0;
            for (int k = 0; k < x.cols_; ++k) acc += x.at(i, k) * y.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

IntMatrix operator*(const Int& c, const IntMatrix& x) {
    IntMatrix r(x.rows_, x.cols_);
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = c * x.data_[k];
    return r;
}

IntMatrix IntMatrix::operator-() const { return Int(-1) * *this; }

long bit_size(const IntMatrix& a) {
    long total = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) total += bit_size(a.at(i, j));
    return total;
}

RatMatrix::RatMatrix(IntMatrix b, Int q) : num(std::move(b)), den(std::move(q)) {
    if (den <= 0) throw std::invalid_argument("RatMatrix: denominator must be positive");
}

long bit_size(const RatMatrix& a) { return bit_size(a.num) + bit_size(a.den); }

}  // namespace ltibound
