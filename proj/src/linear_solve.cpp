#include "ltibound/linear_solve.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltibound {

std::optional<RationalSolution> solve(const IntMatrix& a, const std::vector<Int>& b,
                                      int* max_entry_bits) {
    const int m = a.rows(), n = a.cols();
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("solve: right-hand side length mismatch");

    auto note_bits = [max_entry_bits](int bits) {
        if (max_entry_bits) *max_entry_bits = std::max(*max_entry_bits, bits);
    };

    EliminationResult e = eliminate(a);
    note_bits(e.max_entry_bits);
    const int r = e.rank;

    RationalSolution sol;
    sol.num.assign(static_cast<size_t>(n), Int(0));
    if (r == 0) {
        sol.denom = 1;
    } else {
        IntMatrix sub = a.submatrix(e.row_set, e.col_set);
        std::vector<Int> bsub;
        bsub.reserve(static_cast<size_t>(r));
        for (int i : e.row_set) bsub.push_back(b[static_cast<size_t>(i)]);
        sol.denom = e.minor;  // det of the ascending pivot submatrix, nonzero
        for (int j = 0; j < r; ++j) {
            EliminationResult cj = eliminate(sub.with_column(j, bsub));
            note_bits(cj.max_entry_bits);
            sol.num[static_cast<size_t>(e.col_set[static_cast<size_t>(j)])] =
                cj.rank < r ? Int(0) : cj.minor;
        }
    }

    // Candidate solves the pivot equations by construction; it solves the
    // system iff it survives substitution into every equation.
    for (int i = 0; i < m; ++i) {
        Int acc = 0;
        for (int j = 0; j < n; ++j) acc += a.at(i, j) * sol.num[static_cast<size_t>(j)];
        if (acc != sol.denom * b[static_cast<size_t>(i)]) return std::nullopt;
    }
    return sol;
}

}  // namespace ltibound
