#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltibound/poly.hpp"

namespace ltibound::testkit {

/// One polynomial factor with known roots, raised to a multiplicity.
///  - RealLinear: (x - a), root a
///  - ComplexPair: (x - alpha)^2 + beta^2, roots alpha +- beta*i
///    (beta == 0 allowed: doubled real root alpha)
///  - ImagPair: x^2 + b with b > 0, roots +- i*sqrt(b)
///  - UnitOne: (x - 1)
struct Factor {
    enum class Kind { RealLinear, ComplexPair, ImagPair, UnitOne };
    Kind kind = Kind::RealLinear;
    long a = 0;
    long alpha = 0, beta = 0;
    long b = 0;
    int mult = 1;

    IntPoly base() const;  // the factor at multiplicity one
};

/// Polynomial described by its factorization; the ground truths below read
/// the root layout directly off the factors, independent of any machinery
/// under test.
struct RootSpec {
    std::vector<Factor> factors;

    IntPoly expand() const;
    int degree() const;
};

/// All roots with negative real part, or zero real part and total
/// multiplicity one (multiplicities of coincident roots from different
/// factors are added).
bool continuous_bounded(const RootSpec& s);

/// All roots inside the open unit disc, or on the circle with total
/// multiplicity one.
bool discrete_bounded(const RootSpec& s);

/// One corpus line: "<seed> <f1,f2,...> <YES|NO>", factor tokens
/// lin:a:m | pair:alpha:beta:m | ipair:b:m | one:m.
struct CorpusEntry {
    std::uint64_t seed = 0;
    RootSpec spec;
    bool expected = false;
};

std::string format_entry(const CorpusEntry& e);
CorpusEntry parse_entry(const std::string& line);

/// Read a manifest ('#' comments and blank lines skipped). mode is
/// "continuous" or "discrete"; every entry's stated verdict is recomputed
/// from the factors and a mismatch throws, so a corrupted corpus cannot
/// silently weaken the tests.
std::vector<CorpusEntry> load_corpus(const std::string& path, const std::string& mode);

}  // namespace ltibound::testkit
