#include "ltibound/testkit/ratpoly.hpp"

#include <stdexcept>
#include <utility>

namespace ltibound::testkit {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) v.emplace_back(c);
    return RatPoly(std::move(v));
}

const Rat& RatPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.front();
}

Rat RatPoly::coeff(int exponent) const {
    int idx = degree() - exponent;
    if (exponent < 0 || idx < 0 || idx > degree()) return 0;
    return coeffs_[static_cast<size_t>(idx)];
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return Rat(1) / leading() * *this;
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (const Rat& c : coeffs_) acc = acc * x + c;
    return acc;
}

RatPoly operator+(const RatPoly& f, const RatPoly& g) {
    int d = std::max(f.degree(), g.degree());
    if (d < 0) return RatPoly();
    std::vector<Rat> v(static_cast<size_t>(d) + 1);
    for (int e = 0; e <= d; ++e) v[static_cast<size_t>(d - e)] = f.coeff(e) + g.coeff(e);
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& f, const RatPoly& g) { return f + (-g); }

RatPoly operator*(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return RatPoly();
    std::vector<Rat> v(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (size_t i = 0; i < f.coeffs_.size(); ++i)
        for (size_t j = 0; j < g.coeffs_.size(); ++j) v[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return RatPoly(std::move(v));
}

RatPoly operator*(const Rat& c, const RatPoly& f) {
    std::vector<Rat> v = f.coeffs_;
    for (Rat& x : v) x *= c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const { return Rat(-1) * *this; }

RatDivMod divmod(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    RatPoly r = f;
    std::vector<Rat> q;
    int dq = f.degree() - g.degree();
    if (dq < 0) return {RatPoly(), r};
    q.resize(static_cast<size_t>(dq) + 1);
    for (int k = dq; k >= 0; --k) {
        int e = g.degree() + k;
        if (r.degree() < e) continue;
        Rat c = r.coeff(e) / g.leading();
        q[static_cast<size_t>(dq - k)] = c;
        // r -= c x^k g
        std::vector<Rat> sub(static_cast<size_t>(e) + 1);
        for (int i = 0; i <= g.degree(); ++i)
            sub[static_cast<size_t>(g.degree() - i)] = c * g.coeff(i);
        r = r - RatPoly(std::move(sub));
    }
    return {RatPoly(std::move(q)), r};
}

RatPoly gcd_poly(RatPoly f, RatPoly g) {
    while (!g.is_zero()) {
        RatPoly r = divmod(f, g).rem;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

RatPoly lcm_poly(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return RatPoly();
    RatPoly d = gcd_poly(f, g);
    return divmod(f * g, d).quot.monic();
}

std::vector<RatPoly> remainder_chain_oracle(const IntPoly& p0, const IntPoly& p1) {
    if (p0.is_zero()) throw std::invalid_argument("remainder_chain_oracle: p0 is zero");
    std::vector<RatPoly> chain{RatPoly::from_int(p0), RatPoly::from_int(p1)};
    while (!chain.back().is_zero())
        chain.push_back(-divmod(chain[chain.size() - 2], chain.back()).rem);
    return chain;
}

}  // namespace ltibound::testkit
