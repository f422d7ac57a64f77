#pragma once

#include <vector>

#include "ltibound/poly.hpp"
#include "ltibound/scalar.hpp"

namespace ltibound::testkit {

/// Polynomial over the rationals, leading-first, canonical (no leading
/// zeros; zero polynomial is the empty list). Reference arithmetic for the
/// oracles; clarity over speed.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly from_int(const IntPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const;
    Rat coeff(int exponent) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    RatPoly monic() const;
    Rat eval(const Rat& x) const;

    bool operator==(const RatPoly&) const = default;
    friend RatPoly operator+(const RatPoly& f, const RatPoly& g);
    friend RatPoly operator-(const RatPoly& f, const RatPoly& g);
    friend RatPoly operator*(const RatPoly& f, const RatPoly& g);
    friend RatPoly operator*(const Rat& c, const RatPoly& f);
    RatPoly operator-() const;

  private:
    std::vector<Rat> coeffs_;
};

/// Euclidean division f = q*g + r, deg r < deg g; g must be nonzero.
struct RatDivMod {
    RatPoly quot, rem;
};
RatDivMod divmod(const RatPoly& f, const RatPoly& g);

/// Monic gcd (gcd(0,0) = 0) and monic lcm.
RatPoly gcd_poly(RatPoly f, RatPoly g);
RatPoly lcm_poly(const RatPoly& f, const RatPoly& g);

/// The negated-remainder chain f0, f1, -rem(f0,f1), ... including the
/// terminating zero polynomial. Requires p0 != 0 and deg p1 < deg p0 (or
/// p1 == 0, giving the two-element chain).
std::vector<RatPoly> remainder_chain_oracle(const IntPoly& p0, const IntPoly& p1);

}  // namespace ltibound::testkit
