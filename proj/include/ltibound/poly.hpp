#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ltibound/matrix.hpp"
#include "ltibound/scalar.hpp"

namespace ltibound {

/// Univariate polynomial with integer coefficients, stored leading-first.
/// The zero polynomial is the empty coefficient list and has degree() == -1;
/// construction strips leading zeros so representation is canonical.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);
    static IntPoly monomial(int degree, Int c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& leading() const;
    /// Coefficient of x^exponent, zero outside the stored range.
    Int coeff(int exponent) const;
    /// Descending coefficients; empty for the zero polynomial.
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntPoly derivative() const;

    bool operator==(const IntPoly&) const = default;
    friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const Int& c, const IntPoly& f);
    IntPoly operator-() const;

    /// "x^3 - 2x + 1" style rendering, "0" for the zero polynomial.
    std::string to_string() const;

  private:
    std::vector<Int> coeffs_;
};

/// p evaluated at a square matrix by Horner's scheme; p == 0 gives the zero
/// matrix of matching shape.
IntMatrix eval_at_matrix(const IntPoly& p, const IntMatrix& a);

}  // namespace ltibound
