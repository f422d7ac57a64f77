#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ltibound/matrix.hpp"

namespace ltibound {

/// Parse failure with 1-based source position for diagnostics.
class MatrixParseError : public std::runtime_error {
  public:
    MatrixParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_, column_;
};

/// Text format: header "m n q" (rows, cols, positive denominator), then m
/// rows of n signed decimal integers, whitespace separated; '#' starts a
/// comment running to end of line. Throws MatrixParseError on any defect,
/// including trailing tokens.
RatMatrix read_matrix(std::istream& in);
RatMatrix read_matrix_file(const std::string& path);

/// Canonical form of the same format; read_matrix(write_matrix(a)) == a.
void write_matrix(const RatMatrix& a, std::ostream& out);

}  // namespace ltibound
