#include "ltibound/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ltibound/elimination.hpp"

namespace ltibound {

namespace {

// Sign prefactor of the bordered-minor identity: -1 exactly when k = 2 mod 4.
int sigma(int k) { return k % 4 == 2 ? -1 : 1; }

bool alternating(const std::vector<int>& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] != -s[i - 1]) return false;
    return true;
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

HurwitzPair decompose(const IntPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("decompose: need degree >= 1");
    HurwitzPair pair;
    pair.d = d;
    pair.f = d / 2;
    pair.parity = d % 2 == 0 ? Parity::Even : Parity::Odd;

    // c_k (coefficient of x^{d-k}) lands in p0 for even k, p1 for odd k,
    // carrying the residual power of i collapsed to a sign.
    std::vector<Int> c0(static_cast<size_t>(d) + 1);  // descending, exponent d at index 0
    std::vector<Int> c1(static_cast<size_t>(d));      // descending, exponent d-1 at index 0
    const int h = (d + 1) / 2;                        // i-power exponent offset for even k
    for (int j = 0; 2 * j <= d; ++j) {
        int s = (pair.parity == Parity::Even ? d / 2 + j : h + j) % 2 == 0 ? 1 : -1;
        c0[static_cast<size_t>(2 * j)] = s * p.coeff(d - 2 * j);
    }
    for (int j = 0; 2 * j + 1 <= d; ++j) {
        int s = (pair.parity == Parity::Even ? d / 2 - 1 + j : (d - 1) / 2 + j) % 2 == 0 ? 1 : -1;
        c1[static_cast<size_t>(2 * j)] = s * p.coeff(d - 1 - 2 * j);
    }
    pair.p0 = IntPoly(std::move(c0));
    pair.p1 = IntPoly(std::move(c1));
    return pair;
}

IntMatrix hurwitz_matrix(const HurwitzPair& pair) {
    const int d = pair.d;
    if (d < 1 || pair.f != d / 2) throw std::invalid_argument("hurwitz_matrix: malformed pair");

    // Interleave the step-two coefficient slots of p0 and p1.
    std::vector<Int> t(static_cast<size_t>(d) + 1);
    for (int c = 0; 2 * c <= d; ++c) t[static_cast<size_t>(2 * c)] = pair.p0.coeff(d - 2 * c);
    for (int c = 0; 2 * c + 1 <= d; ++c)
        t[static_cast<size_t>(2 * c + 1)] = pair.p1.coeff(d - 1 - 2 * c);

    IntMatrix M(d + 1, d + 1);
    for (int r = 0; r <= d; ++r)
        for (int c = 0; c <= d; ++c) {
            int idx = 2 * c - r;
            if (idx >= 0 && idx <= d) M.at(r, c) = t[static_cast<size_t>(idx)];
        }
    return M;
}

SignChainReport chain_signs(const IntMatrix& M, int d, int f) {
    if (M.rows() != d + 1 || M.cols() != d + 1 || f != d / 2)
        throw std::invalid_argument("chain_signs: matrix/degree mismatch");
    SignChainReport rep;
    Int prev_prod = 1;  // product of chain leading coefficients through k-1
    for (int k = 0; k <= d; ++k) {
        std::vector<int> head = iota_vec(k + 1);
        EliminationResult e = eliminate(M.submatrix(head, head));
        rep.max_entry_bits = std::max(rep.max_entry_bits, e.max_entry_bits);
        Int mk = e.rank < k + 1 ? Int(0) : e.minor;
        rep.leading_minors.push_back(mk);
        if (mk != 0) {
            Int prod = sigma(k) * mk;
            rep.leading_signs.push_back(sign_of(prod) * sign_of(prev_prod));
            prev_prod = prod;
            continue;
        }
        // First vanishing minor. The chain either terminated cleanly one step
        // earlier (all bordered probes vanish too) or degenerates.
        bool nonzero_probe = false;
        int nslots = (d - k) / 2 + 1;
        for (int l = 1; l < nslots && !nonzero_probe; ++l) {
            std::vector<int> cols = iota_vec(k);
            cols.push_back(k + l);
            EliminationResult pe = eliminate(M.submatrix(head, cols));
            rep.max_entry_bits = std::max(rep.max_entry_bits, pe.max_entry_bits);
            if (pe.rank == k + 1) nonzero_probe = true;
        }
        rep.m = k - 1;
        rep.status = nonzero_probe ? ChainStatus::S2 : ChainStatus::S1;
        return rep;
    }
    rep.m = d;
    rep.status = ChainStatus::AllNonzeroMinors;
    return rep;
}

IntPoly extract_pm(const IntMatrix& M, int m, int d, int f) {
    if (M.rows() != d + 1 || M.cols() != d + 1 || f != d / 2 || m < 0 || m > d)
        throw std::invalid_argument("extract_pm: bad arguments");
    int sgn_prod = 1;  // sign of the leading-coefficient product through m-1
    if (m >= 1) {
        Int prod = sigma(m - 1) * determinant(M.submatrix(iota_vec(m), iota_vec(m)));
        if (prod == 0) throw std::logic_error("extract_pm: chain product vanished");
        sgn_prod = sign_of(prod);
    }
    const int nslots = (d - m) / 2 + 1;
    std::vector<Int> coeffs(static_cast<size_t>(d - m) + 1);  // step-two support
    std::vector<int> rows = iota_vec(m + 1);
    for (int l = 0; l < nslots; ++l) {
        std::vector<int> cols = iota_vec(m);
        cols.push_back(m + l);
        coeffs[static_cast<size_t>(2 * l)] =
            sgn_prod * sigma(m) * determinant(M.submatrix(rows, cols));
    }
    IntPoly p(std::move(coeffs));
    if (p.degree() != d - m) throw std::logic_error("extract_pm: leading coefficient vanished");
    return p;
}

KernelVerdict has_boundedness_property(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("has_boundedness_property: zero polynomial");
    KernelVerdict v;
    if (p.degree() == 0) {  // no roots at all
        v.bounded = true;
        v.phase1.m = 0;
        v.phase1.leading_signs = {sign_of(p.leading())};
        return v;
    }

    HurwitzPair pair = decompose(p);
    const int d = pair.d;

    if (pair.p1.is_zero()) {
        // Remainder chain ends before it starts: m = 0 and the whole of p0 is
        // carried into the second phase. No scheme matrix exists here.
        v.phase1.status = ChainStatus::S1;
        v.phase1.m = 0;
        v.phase1.leading_signs = {sign_of(pair.p0.leading())};
        v.p_ext0 = pair.p0;
    } else if (pair.p1.degree() < d - 1) {
        v.phase1.status = ChainStatus::NotStepOne;
        v.phase1.m = 0;
        v.phase1.leading_signs = {sign_of(pair.p0.leading())};
        v.failing_condition = "p1 drops degree by more than one";
        return v;
    } else {
        IntMatrix M = hurwitz_matrix(pair);
        v.phase1 = chain_signs(M, d, pair.f);
        v.max_entry_bits = v.phase1.max_entry_bits;
        if (v.phase1.status == ChainStatus::S2) {
            v.failing_condition = "chain degree drop exceeds one";
            return v;
        }
        if (!alternating(v.phase1.leading_signs)) {
            v.failing_condition = "chain signs not strictly alternating";
            return v;
        }
        v.p_ext0 = extract_pm(M, v.phase1.m, d, pair.f);
        if (v.phase1.m == d) {
            v.bounded = true;  // terminal chain polynomial is a constant
            return v;
        }
    }

    // Second phase: the terminal chain polynomial carries every imaginary-axis
    // root of p. It is bounded-compatible iff all its roots are real and
    // simple, which the same minor scan decides against its negated
    // derivative (signs alternate iff the root count is full).
    const int ed = v.p_ext0.degree();
    HurwitzPair ext;
    ext.p0 = v.p_ext0;
    ext.p1 = -v.p_ext0.derivative();
    ext.d = ed;
    ext.f = ed / 2;
    ext.parity = ed % 2 == 0 ? Parity::Even : Parity::Odd;
    IntMatrix Me = hurwitz_matrix(ext);
    v.ext = chain_signs(Me, ed, ext.f);
    v.max_entry_bits = std::max(v.max_entry_bits, v.ext->max_entry_bits);
    if (v.ext->status == ChainStatus::S2) {
        v.failing_condition = "extended chain degree drop exceeds one";
        return v;
    }
    if (v.ext->m < ed) {
        v.failing_condition = "extended chain ends short of its degree";
        return v;
    }
    if (!alternating(v.ext->leading_signs)) {
        v.failing_condition = "extended chain signs not strictly alternating";
        return v;
    }
    v.bounded = true;
    return v;
}

}  // namespace ltibound
