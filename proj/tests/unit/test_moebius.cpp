#include "doctest.h"

#include <vector>

#include "ltibound/kernel.hpp"
#include "ltibound/moebius.hpp"
#include "ltibound/testkit/ratpoly.hpp"
#include "ltibound/testkit/rng.hpp"

using namespace ltibound;
using testkit::RatPoly;
using testkit::TestRng;

namespace {

// Multiplicity of root r in p, by repeated exact division.
int multiplicity_at(const IntPoly& p, const Rat& r) {
    RatPoly q = RatPoly::from_int(p);
    RatPoly lin({Rat(1), -r});
    int m = 0;
    while (!q.is_zero() && q.degree() >= 1) {
        testkit::RatDivMod dm = testkit::divmod(q, lin);
        if (!dm.rem.is_zero()) break;
        q = dm.quot;
        ++m;
    }
    return m;
}

IntPoly random_poly(TestRng& rng, int deg, long mag) {
    std::vector<Int> c(static_cast<size_t>(deg) + 1);
    c[0] = rng.nonzero(mag);
    for (int k = 1; k <= deg; ++k) c[static_cast<size_t>(k)] = rng.range(-mag, mag);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("moebius_transform on frozen polynomials") {
    SUBCASE("x^2 - 1") {
        MoebiusResult r = moebius_transform(IntPoly{1, 0, -1});
        CHECK(r.transformed == IntPoly{4, 0});
        CHECK(r.delta == 1);
        CHECK(r.output == IntPoly{4, 0});
    }
    SUBCASE("(x - 1)^2") {
        MoebiusResult r = moebius_transform(IntPoly{1, -2, 1});
        CHECK(r.transformed == IntPoly{4});
        CHECK(r.delta == 2);
        CHECK(r.output == IntPoly{1, 0, 0});  // canonical failing witness
    }
    SUBCASE("x^2 + 1") {
        MoebiusResult r = moebius_transform(IntPoly{1, 0, 1});
        CHECK(r.transformed == IntPoly{2, 0, 2});
        CHECK(r.delta == 0);
        CHECK(r.output == IntPoly{2, 0, 2});
    }
    SUBCASE("x - 1") {
        MoebiusResult r = moebius_transform(IntPoly{1, -1});
        CHECK(r.transformed == IntPoly{2});
        CHECK(r.delta == 1);
        CHECK(r.output == IntPoly{2});
    }
    SUBCASE("2x - 1") {
        MoebiusResult r = moebius_transform(IntPoly{2, -1});
        CHECK(r.transformed == IntPoly{1, 3});
        CHECK(r.delta == 0);
    }
    SUBCASE("x + 1") {
        MoebiusResult r = moebius_transform(IntPoly{1, 1});
        CHECK(r.transformed == IntPoly{2, 0});
        CHECK(r.delta == 0);
    }
}

TEST_CASE("moebius_transform rejects constants and zero") {
    CHECK_THROWS(moebius_transform(IntPoly()));
    CHECK_THROWS(moebius_transform(IntPoly{7}));
}

TEST_CASE("delta equals the multiplicity of the root at one") {
    TestRng rng(61);
    for (int t = 0; t < 80; ++t) {
        int gdeg = static_cast<int>(rng.range(1, 6));
        IntPoly g = random_poly(rng, gdeg, 6);
        if (RatPoly::from_int(g).eval(Rat(1)) == 0) continue;  // want g(1) != 0
        int k = static_cast<int>(rng.range(0, 3));
        IntPoly p = g;
        for (int i = 0; i < k; ++i) p = p * IntPoly{1, -1};

        MoebiusResult r = moebius_transform(p);
        CHECK(r.delta == k);
        CHECK(r.delta == multiplicity_at(p, Rat(1)));
        CHECK(r.transformed.degree() == p.degree() - r.delta);
    }
}

TEST_CASE("the transformed polynomial never vanishes and scales linearly") {
    TestRng rng(62);
    for (int t = 0; t < 40; ++t) {
        IntPoly p = random_poly(rng, static_cast<int>(rng.range(1, 8)), 9);
        MoebiusResult r = moebius_transform(p);
        // Value at 1 is leading(p) * 2^deg, so P is never the zero polynomial.
        Int expect = p.leading();
        for (int i = 0; i < p.degree(); ++i) expect *= 2;
        CHECK(RatPoly::from_int(r.transformed).eval(Rat(1)) == Rat(expect));

        Int c(rng.nonzero(5));
        MoebiusResult rs = moebius_transform(c * p);
        CHECK(rs.transformed == c * r.transformed);
        CHECK(rs.delta == r.delta);
    }
}

TEST_CASE("rational roots transport with sign, side and multiplicity") {
    // Root lambda = a/b of the input maps to (lambda+1)/(lambda-1), negative
    // exactly when |lambda| < 1, zero real part exactly when |lambda| = 1
    // (for rationals: lambda = +-1).
    TestRng rng(63);
    for (int t = 0; t < 60; ++t) {
        int nroots = static_cast<int>(rng.range(1, 3));
        IntPoly p{1};
        std::vector<std::pair<Rat, int>> roots;  // (lambda, multiplicity), lambda != 1
        for (int i = 0; i < nroots; ++i) {
            long b = rng.range(1, 5);
            long a = rng.range(-8, 8);
            if (a == b) a = b + 1;  // exclude lambda = 1
            int mult = static_cast<int>(rng.range(1, 2));
            Rat lam(a, b);
            lam.canonicalize();
            for (int j = 0; j < mult; ++j) p = p * IntPoly{b, -a};
            bool merged = false;
            for (auto& rm : roots)
                if (rm.first == lam) {
                    rm.second += mult;
                    merged = true;
                }
            if (!merged) roots.emplace_back(lam, mult);
        }

        MoebiusResult r = moebius_transform(p);
        CHECK(r.delta == 0);
        for (const auto& [lam, mult] : roots) {
            Rat img = (lam + 1) / (lam - 1);
            CHECK(RatPoly::from_int(r.transformed).eval(img) == 0);
            CHECK(multiplicity_at(r.transformed, img) == mult);
            // Side correspondence for real rational roots.
            Rat alam = abs(lam);
            if (alam < 1) CHECK(img < 0);
            if (alam > 1) CHECK(img > 0);
            if (alam == 1) CHECK(img == 0);  // lambda = -1
        }
    }
}

TEST_CASE("reduction output settles the discrete question") {
    // Spot equivalences straight from root placement.
    CHECK(has_boundedness_property(moebius_transform(IntPoly{1, 0, -1}).output).bounded);
    CHECK_FALSE(has_boundedness_property(moebius_transform(IntPoly{1, -2, 1}).output).bounded);
    CHECK(has_boundedness_property(moebius_transform(IntPoly{1, 0, 1}).output).bounded);
    CHECK(has_boundedness_property(moebius_transform(IntPoly{1, -1}).output).bounded);
    CHECK(has_boundedness_property(moebius_transform(IntPoly{2, -1}).output).bounded);
    CHECK_FALSE(has_boundedness_property(moebius_transform(IntPoly{1, -2}).output).bounded);
    // Cube roots of unity: all simple on the circle.
    CHECK(has_boundedness_property(moebius_transform(IntPoly{1, 0, 0, -1}).output).bounded);
    // Doubled pair on the circle.
    CHECK_FALSE(
        has_boundedness_property(moebius_transform(IntPoly{1, 0, 2, 0, 1}).output).bounded);
}
