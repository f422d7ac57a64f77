#include "ltibound/minimal_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "ltibound/linear_solve.hpp"

namespace ltibound {

IntPoly ScaledMinimalPolynomial::as_poly() const {
    std::vector<Int> c;
    c.reserve(tail.size() + 1);
    c.push_back(e0);
    c.insert(c.end(), tail.begin(), tail.end());
    return IntPoly(std::move(c));
}

ScaledMinimalPolynomial minimal_polynomial(const IntMatrix& a, MinimalPolynomialStats* stats) {
    if (!a.is_square() || a.rows() == 0)
        throw std::invalid_argument("minimal_polynomial: need a nonempty square matrix");
    const int n = a.rows();

    std::vector<IntMatrix> pw;  // A^0 .. A^n
    pw.reserve(static_cast<size_t>(n) + 1);
    pw.push_back(IntMatrix::identity(n));
    for (int l = 1; l <= n; ++l) pw.push_back(pw.back() * a);

    for (int d = 1; d <= n; ++d) {
        // Columns vec(A^{d-1}), ..., vec(A^0); right-hand side -vec(A^d).
        IntMatrix sys(n * n, d);
        for (int j = 0; j < d; ++j) {
            std::vector<Int> col = pw[static_cast<size_t>(d - 1 - j)].column_stack();
            for (int i = 0; i < n * n; ++i) sys.at(i, j) = col[static_cast<size_t>(i)];
        }
        std::vector<Int> rhs = pw[static_cast<size_t>(d)].column_stack();
        for (Int& v : rhs) v = -v;

        if (stats) {
            for (int i = 0; i < n * n; ++i)
                for (int j = 0; j < d; ++j)
                    stats->max_system_entry_bits =
                        std::max(stats->max_system_entry_bits, bit_size(sys.at(i, j)));
            for (const Int& v : rhs)
                stats->max_system_entry_bits = std::max(stats->max_system_entry_bits, bit_size(v));
        }

        auto sol = solve(sys, rhs, stats ? &stats->max_solver_entry_bits : nullptr);
        if (!sol) continue;

        ScaledMinimalPolynomial p;
        p.e0 = sol->denom;
        p.tail = sol->num;
        if (p.e0 < 0) {
            p.e0 = -p.e0;
            for (Int& v : p.tail) v = -v;
        }
        if (!eval_at_matrix(p.as_poly(), a).is_zero())
            throw std::logic_error("minimal_polynomial: candidate fails to annihilate");
        return p;
    }
    // Cayley-Hamilton guarantees feasibility at d = n.
    throw std::logic_error("minimal_polynomial: no annihilating polynomial up to degree n");
}

}  // namespace ltibound
