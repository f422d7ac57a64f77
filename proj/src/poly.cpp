#include "ltibound/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ltibound {

static void strip_leading_zeros(std::vector<Int>& c) {
    size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    if (lead) c.erase(c.begin(), c.begin() + static_cast<long>(lead));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    strip_leading_zeros(coeffs_);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long v : coeffs) coeffs_.emplace_back(v);
    strip_leading_zeros(coeffs_);
}

IntPoly IntPoly::monomial(int degree, Int c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Int> v(static_cast<size_t>(degree) + 1);
    v[0] = std::move(c);
    return IntPoly(std::move(v));
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.front();
}

Int IntPoly::coeff(int exponent) const {
    int idx = degree() - exponent;
    if (exponent < 0 || idx < 0 || idx > degree()) return 0;
    return coeffs_[static_cast<size_t>(idx)];
}

IntPoly IntPoly::derivative() const {
    int d = degree();
    if (d <= 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) v[static_cast<size_t>(k)] = Int(d - k) * coeffs_[static_cast<size_t>(k)];
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    int d = std::max(f.degree(), g.degree());
    if (d < 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(d) + 1);
    for (int e = 0; e <= d; ++e) v[static_cast<size_t>(d - e)] = f.coeff(e) + g.coeff(e);
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) { return f + (-g); }

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly();
    std::vector<Int> v(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (size_t i = 0; i < f.coeffs_.size(); ++i)
        for (size_t j = 0; j < g.coeffs_.size(); ++j) v[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly operator*(const Int& c, const IntPoly& f) {
    std::vector<Int> v = f.coeffs_;
    for (Int& x : v) x *= c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const { return Int(-1) * *this; }

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        Int c = coeff(e);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int mag = abs(c);
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e >= 1) {
            os << "x";
            if (e >= 2) os << "^" << e;
        }
    }
    return os.str();
}

IntMatrix eval_at_matrix(const IntPoly& p, const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("eval_at_matrix: matrix not square");
    const int n = a.rows();
    IntMatrix r(n, n);
    for (const Int& c : p.coeffs()) {
        r = r * a;
        for (int i = 0; i < n; ++i) r.at(i, i) += c;
    }
    return r;
}

}  // namespace ltibound
