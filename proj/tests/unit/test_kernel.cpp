#include "doctest.h"

#include <string>
#include <vector>

#include "ltibound/kernel.hpp"
#include "ltibound/testkit/oracles.hpp"
#include "ltibound/testkit/ratpoly.hpp"
#include "ltibound/testkit/rng.hpp"
#include "ltibound/testkit/rootspec.hpp"

using namespace ltibound;
using testkit::GaussRat;
using testkit::RatPoly;
using testkit::TestRng;

namespace {

const std::string kDataDir = LTIBOUND_TEST_DATA_DIR;

HurwitzPair make_pair(IntPoly p0, IntPoly p1, int d) {
    HurwitzPair pair;
    pair.p0 = std::move(p0);
    pair.p1 = std::move(p1);
    pair.d = d;
    pair.f = d / 2;
    pair.parity = d % 2 == 0 ? Parity::Even : Parity::Odd;
    return pair;
}

// Random pair with the step-two slot layout and exact degrees d and d-1.
HurwitzPair random_pair(TestRng& rng, int maxdeg) {
    int d = static_cast<int>(rng.range(1, maxdeg));
    std::vector<Int> c0(static_cast<size_t>(d) + 1), c1(static_cast<size_t>(d));
    c0[0] = rng.nonzero(9);
    for (int j = 1; 2 * j <= d; ++j) c0[static_cast<size_t>(2 * j)] = rng.range(-9, 9);
    c1[0] = rng.nonzero(9);
    for (int j = 1; 2 * j + 1 <= d; ++j) c1[static_cast<size_t>(2 * j)] = rng.range(-9, 9);
    return make_pair(IntPoly(std::move(c0)), IntPoly(std::move(c1)), d);
}

// What chain_signs must report, read off the oracle remainder chain
// (terminal zero included): first zero entry ends the chain (S1, or the full
// run), first degree gap > 1 on a nonzero entry certifies S2.
struct ChainOutcome {
    ChainStatus status;
    int m;
};
ChainOutcome classify_chain(const std::vector<RatPoly>& chain, int d) {
    for (size_t k = 1; k < chain.size(); ++k) {
        const RatPoly& q = chain[k];
        int expect = d - static_cast<int>(k);
        if (q.is_zero())
            return {static_cast<int>(k) - 1 == d ? ChainStatus::AllNonzeroMinors : ChainStatus::S1,
                    static_cast<int>(k) - 1};
        if (q.degree() < expect) return {ChainStatus::S2, static_cast<int>(k) - 1};
    }
    REQUIRE(false);  // the oracle chain always terminates in zero
    return {ChainStatus::S2, -1};
}

bool divides_exactly(const RatPoly& divisor, const IntPoly& dividend) {
    if (dividend.is_zero()) return true;
    return testkit::divmod(RatPoly::from_int(dividend), divisor).rem.is_zero();
}

}  // namespace

TEST_CASE("decompose splits along the imaginary axis") {
    SUBCASE("frozen examples") {
        HurwitzPair a = decompose(IntPoly{1, 2, 2});
        CHECK(a.p0 == IntPoly{-1, 0, 2});
        CHECK(a.p1 == IntPoly{2, 0});
        CHECK(a.d == 2);
        CHECK(a.f == 1);
        CHECK(a.parity == Parity::Even);

        HurwitzPair b = decompose(IntPoly{1, 0, 1});
        CHECK(b.p0 == IntPoly{-1, 0, 1});
        CHECK(b.p1.is_zero());

        HurwitzPair c = decompose(IntPoly{1, 1, 1, 1});
        CHECK(c.p0 == IntPoly{1, 0, -1, 0});
        CHECK(c.p1 == IntPoly{-1, 0, 1});
        CHECK(c.d == 3);
        CHECK(c.parity == Parity::Odd);

        HurwitzPair e = decompose(IntPoly{1, 0, 2, 0, 1});
        CHECK(e.p0 == IntPoly{1, 0, -2, 0, 1});
        CHECK(e.p1.is_zero());

        HurwitzPair f = decompose(IntPoly{1, -1});
        CHECK(f.p0 == IntPoly{-1, 0});
        CHECK(f.p1 == IntPoly{-1});
    }
    SUBCASE("rejects constants and zero") {
        CHECK_THROWS(decompose(IntPoly()));
        CHECK_THROWS(decompose(IntPoly{5}));
    }
    SUBCASE("identity at Gaussian rational points") {
        // Even d: p(i*x) = p0(x) + i*p1(x). Odd d: p(i*x) = p1(x) - i*p0(x)
        // (dividing the defining identity i*p(ix) = p0 + i*p1 by i).
        TestRng rng(51);
        for (int t = 0; t < 60; ++t) {
            int d = static_cast<int>(rng.range(1, 8));
            std::vector<Int> c(static_cast<size_t>(d) + 1);
            c[0] = rng.nonzero(9);
            for (int k = 1; k <= d; ++k) c[static_cast<size_t>(k)] = rng.range(-9, 9);
            IntPoly p(c);
            HurwitzPair pair = decompose(p);

            Rat x0(rng.range(-20, 20), rng.range(1, 7));
            x0.canonicalize();
            GaussRat lhs = testkit::eval_gauss(p, GaussRat{Rat(0), x0});
            Rat v0 = RatPoly::from_int(pair.p0).eval(x0);
            Rat v1 = RatPoly::from_int(pair.p1).eval(x0);
            if (d % 2 == 0) {
                CHECK(lhs.re == v0);
                CHECK(lhs.im == v1);
            } else {
                CHECK(lhs.re == v1);
                CHECK(lhs.im == -v0);
            }
        }
    }
}

TEST_CASE("hurwitz_matrix interleaves the slot coefficients") {
    SUBCASE("degree two") {
        IntMatrix m = hurwitz_matrix(make_pair(IntPoly{-1, 0, 2}, IntPoly{2, 0}, 2));
        CHECK(m == IntMatrix{{-1, 2, 0}, {0, 2, 0}, {0, -1, 2}});
    }
    SUBCASE("degree three") {
        IntMatrix m = hurwitz_matrix(make_pair(IntPoly{1, 0, -1, 0}, IntPoly{-1, 0, 1}, 3));
        CHECK(m == IntMatrix{{1, -1, 0, 0}, {0, -1, 1, 0}, {0, 1, -1, 0}, {0, 0, -1, 1}});
    }
    SUBCASE("the 1x1 leading minor is the leading coefficient of p0") {
        TestRng rng(52);
        for (int t = 0; t < 30; ++t) {
            HurwitzPair pair = random_pair(rng, 10);
            IntMatrix m = hurwitz_matrix(pair);
            CHECK(m.rows() == pair.d + 1);
            CHECK(m.cols() == pair.d + 1);
            CHECK(m.at(0, 0) == pair.p0.leading());
        }
    }
    SUBCASE("malformed pairs are rejected") {
        HurwitzPair bad = make_pair(IntPoly{1, 0, 0}, IntPoly{1}, 2);
        bad.f = 2;  // f inconsistent with d
        CHECK_THROWS(hurwitz_matrix(bad));
        HurwitzPair degenerate = make_pair(IntPoly{1}, IntPoly(), 0);
        CHECK_THROWS(hurwitz_matrix(degenerate));
    }
}

TEST_CASE("chain_signs on frozen matrices") {
    SUBCASE("complete chain") {
        IntMatrix m = hurwitz_matrix(make_pair(IntPoly{-1, 0, 2}, IntPoly{2, 0}, 2));
        SignChainReport r = chain_signs(m, 2, 1);
        CHECK(r.status == ChainStatus::AllNonzeroMinors);
        CHECK(r.m == 2);
        CHECK(r.leading_signs == std::vector<int>{-1, 1, -1});
        CHECK(r.leading_minors == std::vector<Int>{-1, -2, -4});
    }
    SUBCASE("clean early termination") {
        IntMatrix m = hurwitz_matrix(make_pair(IntPoly{1, 0, -1, 0}, IntPoly{-1, 0, 1}, 3));
        SignChainReport r = chain_signs(m, 3, 1);
        CHECK(r.status == ChainStatus::S1);
        CHECK(r.m == 1);
        CHECK(r.leading_signs == std::vector<int>{1, -1});
        CHECK(r.leading_minors == std::vector<Int>{1, -1, 0});
    }
    SUBCASE("degree gap flagged by a probe minor") {
        // p0 = x^4 + 1, p1 = x^3: the remainder drops straight to a constant.
        IntMatrix m = hurwitz_matrix(make_pair(IntPoly{1, 0, 0, 0, 1}, IntPoly{1, 0, 0, 0}, 4));
        SignChainReport r = chain_signs(m, 4, 2);
        CHECK(r.status == ChainStatus::S2);
        CHECK(r.m == 1);
        CHECK(r.leading_signs == std::vector<int>{1, 1});
    }
    SUBCASE("shape validation") {
        CHECK_THROWS(chain_signs(IntMatrix::identity(3), 3, 1));
        CHECK_THROWS(chain_signs(IntMatrix::identity(3), 2, 0));
    }
}

TEST_CASE("extract_pm recovers the terminal chain polynomial") {
    IntMatrix m3 = hurwitz_matrix(make_pair(IntPoly{1, 0, -1, 0}, IntPoly{-1, 0, 1}, 3));
    CHECK(extract_pm(m3, 1, 3, 1) == IntPoly{-1, 0, 1});

    IntMatrix m2 = hurwitz_matrix(make_pair(IntPoly{-1, 0, 2}, IntPoly{2, 0}, 2));
    CHECK(extract_pm(m2, 2, 2, 1) == IntPoly{-4});  // |a0*a1| * p2 = 2 * (-2)
    CHECK(extract_pm(m2, 0, 2, 1) == IntPoly{-1, 0, 2});

    CHECK_THROWS(extract_pm(m2, 3, 2, 1));
    CHECK_THROWS(extract_pm(m2, -1, 2, 1));
}

TEST_CASE("minor products and extractions match the remainder-chain oracle") {
    TestRng rng(53);
    int seen_full = 0, seen_s1 = 0, seen_s2 = 0;
    for (int t = 0; t < 80; ++t) {
        HurwitzPair pair;
        if (t % 4 == 3) {
            // Plant a common step-two factor so the chain terminates early.
            HurwitzPair inner = random_pair(rng, 5);
            IntPoly g = rng.chance_percent(50) ? IntPoly{1, 0, rng.range(-6, 6)} : IntPoly{1, 0};
            pair = make_pair(g * inner.p0, g * inner.p1, inner.d + g.degree());
        } else {
            pair = random_pair(rng, 8);
        }
        const int d = pair.d;
        IntMatrix M = hurwitz_matrix(pair);
        SignChainReport rep = chain_signs(M, d, pair.f);

        std::vector<RatPoly> chain = testkit::remainder_chain_oracle(pair.p0, pair.p1);
        ChainOutcome expect = classify_chain(chain, d);
        CHECK(rep.status == expect.status);
        CHECK(rep.m == expect.m);
        REQUIRE(rep.m >= 0);
        REQUIRE(static_cast<size_t>(rep.m) < chain.size());

        (expect.status == ChainStatus::AllNonzeroMinors
             ? seen_full
             : expect.status == ChainStatus::S1 ? seen_s1 : seen_s2)++;

        // Leading coefficients: sign sequence, cumulative products against
        // the sign-adjusted minors, and the scaled coefficient extraction.
        Rat prod(1);
        for (int k = 0; k <= rep.m; ++k) {
            const Rat& lead = chain[static_cast<size_t>(k)].leading();
            CHECK(rep.leading_signs[static_cast<size_t>(k)] == sgn(lead));

            Rat scale = abs(prod);  // |a_0 ... a_{k-1}|
            IntPoly ex = extract_pm(M, k, d, pair.f);
            CHECK(RatPoly::from_int(ex) == scale * chain[static_cast<size_t>(k)]);

            prod *= lead;
            int sig = k % 4 == 2 ? -1 : 1;
            CHECK(prod == Rat(sig) * Rat(rep.leading_minors[static_cast<size_t>(k)]));
        }
    }
    CHECK(seen_full > 10);
    CHECK(seen_s1 + seen_s2 > 10);  // the planted common factors end chains early
}

TEST_CASE("boundedness verdicts on worked examples") {
    CHECK(has_boundedness_property(IntPoly{1, 2, 2}).bounded);       // roots -1 +- i
    CHECK(has_boundedness_property(IntPoly{1, 0, 1}).bounded);       // +-i simple
    CHECK_FALSE(has_boundedness_property(IntPoly{1, 0, 2, 0, 1}).bounded);  // +-i doubled
    CHECK_FALSE(has_boundedness_property(IntPoly{1, -1}).bounded);   // root +1
    CHECK(has_boundedness_property(IntPoly{1, 1, 1, 1}).bounded);    // -1, +-i

    CHECK(has_boundedness_property(IntPoly{1, 0}).bounded);          // root 0 simple
    CHECK_FALSE(has_boundedness_property(IntPoly{1, 0, 0}).bounded); // root 0 doubled
    CHECK_FALSE(has_boundedness_property(IntPoly{1, 0, 0, 0}).bounded);
    CHECK_FALSE(has_boundedness_property(IntPoly{1, 0, -1}).bounded);  // root +1
    CHECK(has_boundedness_property(IntPoly{1, 1, 0}).bounded);       // 0 and -1
    CHECK_FALSE(has_boundedness_property(IntPoly{1, 0, 0, 0, 1}).bounded);  // 8th roots of -1
}

TEST_CASE("verdict evidence carries the chain that produced it") {
    SUBCASE("two-phase acceptance") {
        KernelVerdict v = has_boundedness_property(IntPoly{1, 1, 1, 1});
        CHECK(v.bounded);
        CHECK(v.phase1.status == ChainStatus::S1);
        CHECK(v.phase1.m == 1);
        CHECK(v.phase1.leading_minors == std::vector<Int>{1, -1, 0});
        CHECK(v.p_ext0 == IntPoly{-1, 0, 1});
        REQUIRE(v.ext);
        CHECK(v.ext->status == ChainStatus::AllNonzeroMinors);
        CHECK(v.ext->m == 2);
        CHECK(v.ext->leading_signs == std::vector<int>{-1, 1, -1});
        CHECK(v.failing_condition.empty());
    }
    SUBCASE("phase-one completion") {
        KernelVerdict v = has_boundedness_property(IntPoly{1, 2, 2});
        CHECK(v.bounded);
        CHECK(v.phase1.status == ChainStatus::AllNonzeroMinors);
        CHECK(v.phase1.m == 2);
        CHECK_FALSE(v.ext);
        CHECK(v.p_ext0.degree() == 0);  // terminal constant
    }
    SUBCASE("p1 identically zero routes through the second phase") {
        KernelVerdict v = has_boundedness_property(IntPoly{1, 0, 1});
        CHECK(v.bounded);
        CHECK(v.phase1.status == ChainStatus::S1);
        CHECK(v.phase1.m == 0);
        CHECK(v.phase1.leading_signs == std::vector<int>{-1});
        CHECK(v.p_ext0 == IntPoly{-1, 0, 1});
        REQUIRE(v.ext);
        CHECK(v.ext->m == 2);
    }
    SUBCASE("named failure conditions") {
        CHECK(has_boundedness_property(IntPoly{1, -1}).failing_condition ==
              "chain signs not strictly alternating");
        CHECK(has_boundedness_property(IntPoly{1, 0, 2, 0, 1}).failing_condition ==
              "extended chain ends short of its degree");
        CHECK(has_boundedness_property(IntPoly{1, 0, 0, 0, 1}).failing_condition ==
              "extended chain degree drop exceeds one");
        CHECK(has_boundedness_property(IntPoly{1, 0, 0, 1}).failing_condition ==
              "p1 drops degree by more than one");
        CHECK(has_boundedness_property(IntPoly{1, 0, 0, 1}).phase1.status ==
              ChainStatus::NotStepOne);
        CHECK(has_boundedness_property(IntPoly{1, 0, -1}).failing_condition ==
              "extended chain signs not strictly alternating");
    }
    SUBCASE("bounded iff no failing condition, on the corpus") {
        auto corpus = testkit::load_corpus(kDataDir + "/kernel_corpus.txt", "continuous");
        for (size_t i = 0; i < corpus.size(); i += 7) {
            KernelVerdict v = has_boundedness_property(corpus[i].spec.expand());
            CHECK(v.bounded == v.failing_condition.empty());
        }
    }
}

TEST_CASE("constants are vacuously bounded and zero is rejected") {
    CHECK(has_boundedness_property(IntPoly{3}).bounded);
    CHECK(has_boundedness_property(IntPoly{-5}).bounded);
    CHECK_THROWS(has_boundedness_property(IntPoly()));
}

TEST_CASE("verdicts agree with by-construction root placement") {
    auto corpus = testkit::load_corpus(kDataDir + "/kernel_corpus.txt", "continuous");
    REQUIRE(corpus.size() >= 300);
    for (const auto& e : corpus) {
        CAPTURE(e.seed);
        CHECK(has_boundedness_property(e.spec.expand()).bounded == e.expected);
    }
}

TEST_CASE("verdicts are invariant under nonzero integer scaling") {
    auto corpus = testkit::load_corpus(kDataDir + "/kernel_corpus.txt", "continuous");
    REQUIRE(corpus.size() >= 30);
    const long scales[] = {-3, -1, 2, 7};
    for (size_t i = 0; i < 30; ++i) {
        IntPoly p = corpus[i].spec.expand();
        bool base = has_boundedness_property(p).bounded;
        for (long c : scales) CHECK(has_boundedness_property(Int(c) * p).bounded == base);
    }
    for (long c : scales) {
        CHECK(has_boundedness_property(Int(c) * IntPoly{1, 1, 1, 1}).bounded);
        CHECK_FALSE(has_boundedness_property(Int(c) * IntPoly{1, -1}).bounded);
    }
}

TEST_CASE("the extracted polynomial is a gcd of the pair") {
    auto corpus = testkit::load_corpus(kDataDir + "/kernel_corpus.txt", "continuous");
    int checked = 0;
    for (const auto& e : corpus) {
        IntPoly p = e.spec.expand();
        if (p.degree() < 1) continue;
        HurwitzPair pair = decompose(p);
        if (pair.p1.is_zero() || pair.p1.degree() < pair.d - 1) continue;
        IntMatrix M = hurwitz_matrix(pair);
        SignChainReport rep = chain_signs(M, pair.d, pair.f);
        if (rep.status == ChainStatus::S2) continue;
        IntPoly pm = extract_pm(M, rep.m, pair.d, pair.f);
        RatPoly pm_monic = RatPoly::from_int(pm).monic();
        CHECK(divides_exactly(pm_monic, pair.p0));
        CHECK(divides_exactly(pm_monic, pair.p1));
        CHECK(pm_monic == testkit::gcd_poly(RatPoly::from_int(pair.p0),
                                            RatPoly::from_int(pair.p1)));
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("negated-derivative chains count real roots") {
    // For a step-two polynomial q with all roots real and simple, the chain
    // seeded with (q, -q') runs to full length with alternating signs; a
    // repeated or complex root breaks that.
    auto full_alternating = [](const IntPoly& q) {
        HurwitzPair pair = make_pair(q, -q.derivative(), q.degree());
        SignChainReport r = chain_signs(hurwitz_matrix(pair), pair.d, pair.f);
        if (r.status != ChainStatus::AllNonzeroMinors) return false;
        for (size_t i = 1; i < r.leading_signs.size(); ++i)
            if (r.leading_signs[i] != -r.leading_signs[i - 1]) return false;
        return true;
    };

    CHECK(full_alternating(IntPoly{1, 0, -1}));                       // +-1
    CHECK(full_alternating(IntPoly{1, 0, -5, 0, 4}));                 // +-1, +-2
    CHECK(full_alternating(IntPoly{1, 0, -5, 0, 4, 0}));              // and 0
    CHECK_FALSE(full_alternating(IntPoly{1, 0, -1, 0, 0}));           // double 0
    CHECK_FALSE(full_alternating(IntPoly{1, 0, 1}));                  // +-i
    CHECK_FALSE(full_alternating(IntPoly{1, 0, 2, 0, 1}));            // +-i doubled

    // Random all-real-simple instances: products of (x^2 - b_i) with
    // distinct b_i > 0, optionally times x.
    TestRng rng(54);
    for (int t = 0; t < 25; ++t) {
        std::vector<long> bs;
        int nf = static_cast<int>(rng.range(1, 3));
        while (static_cast<int>(bs.size()) < nf) {
            long b = rng.range(1, 30);
            bool dup = false;
            for (long x : bs) dup = dup || x == b;
            if (!dup) bs.push_back(b);
        }
        IntPoly q{1};
        for (long b : bs) q = q * IntPoly{1, 0, -b};
        if (rng.chance_percent(50)) q = q * IntPoly{1, 0};
        CHECK(full_alternating(q));
        IntPoly sq = q * q;  // every root doubled
        CHECK_FALSE(full_alternating(sq));
    }
}
