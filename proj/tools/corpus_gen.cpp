// Writes the factor-level ground-truth corpora consumed by the test suite.
// Deterministic: fixed seeds, so regenerating produces byte-identical files.
//
// usage: corpus_gen OUTDIR   (writes kernel_corpus.txt and discrete_corpus.txt)

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ltibound/testkit/rng.hpp"
#include "ltibound/testkit/rootspec.hpp"

namespace tk = ltibound::testkit;
using tk::CorpusEntry;
using tk::Factor;
using tk::RootSpec;
using tk::TestRng;

namespace {

Factor lin(long a, int m) {
    Factor f;
    f.kind = Factor::Kind::RealLinear;
    f.a = a;
    f.mult = m;
    return f;
}

Factor pairf(long alpha, long beta, int m) {
    Factor f;
    f.kind = Factor::Kind::ComplexPair;
    f.alpha = alpha;
    f.beta = beta;
    f.mult = m;
    return f;
}

Factor ipair(long b, int m) {
    Factor f;
    f.kind = Factor::Kind::ImagPair;
    f.b = b;
    f.mult = m;
    return f;
}

Factor one(int m) {
    Factor f;
    f.kind = Factor::Kind::UnitOne;
    f.mult = m;
    return f;
}

CorpusEntry make_entry(std::uint64_t seed, RootSpec spec, bool continuous) {
    CorpusEntry e;
    e.seed = seed;
    e.spec = std::move(spec);
    e.expected = continuous ? tk::continuous_bounded(e.spec) : tk::discrete_bounded(e.spec);
    return e;
}

// Left-half-plane factors filling up to `budget` degrees.
void add_stable_filler(TestRng& rng, RootSpec& s, int& budget) {
    while (budget > 0 && rng.chance_percent(75)) {
        if (budget >= 2 && rng.chance_percent(40)) {
            int m = static_cast<int>(rng.range(1, std::min(2, budget / 2)));
            s.factors.push_back(pairf(rng.range(-3, -1), rng.range(1, 3), m));
            budget -= 2 * m;
        } else {
            int m = static_cast<int>(rng.range(1, std::min(4, budget)));
            s.factors.push_back(lin(rng.range(-5, -1), m));
            budget -= m;
        }
    }
}

RootSpec random_continuous_spec(TestRng& rng) {
    static const long axis_bs[6] = {1, 2, 3, 4, 5, 9};  // mix of square and not
    RootSpec s;
    int budget = static_cast<int>(rng.range(1, 10));
    int roll = static_cast<int>(rng.range(0, 99));

    if (roll < 30) {
        // Intended YES: simple axis roots plus stable filler.
        if (budget >= 2 && rng.chance_percent(70)) {
            s.factors.push_back(ipair(axis_bs[rng.range(0, 5)], 1));
            budget -= 2;
        }
        if (budget >= 1 && rng.chance_percent(40)) {
            s.factors.push_back(lin(0, 1));
            budget -= 1;
        }
        add_stable_filler(rng, s, budget);
    } else if (roll < 50) {
        // Right-half-plane intrusion.
        if (budget >= 2 && rng.chance_percent(40)) {
            s.factors.push_back(pairf(rng.range(1, 3), rng.range(0, 3), 1));
            budget -= 2;
        } else {
            int m = static_cast<int>(rng.range(1, std::min(2, budget)));
            s.factors.push_back(lin(rng.range(1, 4), m));
            budget -= m;
        }
        add_stable_filler(rng, s, budget);
    } else if (roll < 70) {
        // Axis root with multiplicity >= 2 (NO), reached different ways.
        int which = static_cast<int>(rng.range(0, 2));
        if (which == 0 && budget >= 4) {
            s.factors.push_back(ipair(axis_bs[rng.range(0, 5)], static_cast<int>(rng.range(2, budget / 2))));
            budget -= 2 * s.factors.back().mult;
        } else if (which == 1 && budget >= 4) {
            long b = axis_bs[rng.range(0, 5)];
            s.factors.push_back(ipair(b, 1));  // duplicated across two factors
            s.factors.push_back(ipair(b, 1));
            budget -= 4;
        } else {
            int m = static_cast<int>(rng.range(2, std::max(2, std::min(4, budget))));
            s.factors.push_back(lin(0, m));
            budget -= m;
        }
        add_stable_filler(rng, s, budget);
    } else if (roll < 85) {
        // Pure stable, any multiplicities: YES regardless of depth.
        add_stable_filler(rng, s, budget);
    } else {
        // Dense axis layouts: several distinct simple axis roots.
        long used[3] = {-1, -1, -1};
        int k = 0;
        while (budget >= 2 && k < 3) {
            long b = axis_bs[rng.range(0, 5)];
            bool dup = false;
            for (int i = 0; i < k; ++i) dup = dup || used[i] == b;
            if (!dup) {
                used[k++] = b;
                s.factors.push_back(ipair(b, 1));
                budget -= 2;
            } else if (rng.chance_percent(30)) {
                s.factors.push_back(ipair(b, 1));  // collision -> NO
                budget -= 2;
            } else {
                break;
            }
        }
        if (budget >= 1 && rng.chance_percent(50)) {
            s.factors.push_back(lin(0, 1));
            budget -= 1;
        }
    }
    if (s.factors.empty()) s.factors.push_back(lin(rng.range(-5, -1), 1));
    return s;
}

RootSpec random_discrete_spec(TestRng& rng, int unit_mult) {
    RootSpec s;
    int budget = 10 - unit_mult;
    if (unit_mult > 0) s.factors.push_back(one(unit_mult));

    int roll = static_cast<int>(rng.range(0, 99));
    bool want_violation = roll < 35 && unit_mult <= 1;  // mult >= 2 at 1 is already NO

    if (want_violation) {
        int which = static_cast<int>(rng.range(0, 2));
        if (which == 0) {
            s.factors.push_back(lin(rng.range(2, 4) * (rng.chance_percent(50) ? 1 : -1), 1));
            budget -= 1;
        } else if (which == 1 && budget >= 2) {
            s.factors.push_back(pairf(rng.range(1, 2), rng.range(1, 2), 1));  // modulus > 1
            budget -= 2;
        } else {
            s.factors.push_back(lin(-1, 2));  // on-circle double root
            budget -= 2;
        }
    }
    // Interior roots (zero) and simple circle roots.
    if (budget >= 1 && rng.chance_percent(70)) {
        int m = static_cast<int>(rng.range(1, std::min(3, budget)));
        s.factors.push_back(lin(0, m));
        budget -= m;
    }
    if (budget >= 1 && rng.chance_percent(35)) {
        s.factors.push_back(lin(-1, 1));
        budget -= 1;
    }
    if (budget >= 2 && rng.chance_percent(30)) {
        s.factors.push_back(ipair(1, 1));
        budget -= 2;
    }
    if (s.factors.empty()) s.factors.push_back(lin(0, 1));
    return s;
}

void write_corpus(const std::string& path, const std::string& mode,
                  const std::vector<CorpusEntry>& entries) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    out << "# mode=" << mode << "\n";
    out << "# <seed> <factors> <verdict>; factor tokens lin:a:m pair:alpha:beta:m ipair:b:m one:m\n";
    out << "# regenerate with: corpus_gen OUTDIR (deterministic)\n";
    for (const CorpusEntry& e : entries) out << tk::format_entry(e) << "\n";
    std::cout << path << ": " << entries.size() << " entries\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: corpus_gen OUTDIR\n";
        return 2;
    }
    const std::string dir = argv[1];

    std::vector<CorpusEntry> cont;
    // Fixed layouts first: the worked kernel examples and axis stress cases.
    cont.push_back(make_entry(0, RootSpec{{pairf(-1, 1, 1)}}, true));            // x^2+2x+2
    cont.push_back(make_entry(0, RootSpec{{ipair(1, 1)}}, true));                // x^2+1
    cont.push_back(make_entry(0, RootSpec{{ipair(1, 2)}}, true));                // (x^2+1)^2
    cont.push_back(make_entry(0, RootSpec{{lin(1, 1)}}, true));                  // x-1
    cont.push_back(make_entry(0, RootSpec{{lin(-1, 1), ipair(1, 1)}}, true));    // x^3+x^2+x+1
    cont.push_back(make_entry(0, RootSpec{{lin(0, 1)}}, true));
    cont.push_back(make_entry(0, RootSpec{{lin(0, 2)}}, true));
    cont.push_back(make_entry(0, RootSpec{{lin(0, 4)}}, true));
    cont.push_back(make_entry(0, RootSpec{{ipair(2, 1), ipair(3, 1)}}, true));
    cont.push_back(make_entry(0, RootSpec{{ipair(2, 1), ipair(2, 1)}}, true));
    cont.push_back(make_entry(0, RootSpec{{ipair(4, 1), pairf(0, 2, 1)}}, true));  // same roots twice
    cont.push_back(make_entry(0, RootSpec{{lin(-2, 4), pairf(-1, 2, 2)}}, true));
    cont.push_back(make_entry(0, RootSpec{{lin(0, 1), ipair(5, 1), lin(-3, 2)}}, true));
    for (std::uint64_t i = 1; cont.size() < 320; ++i) {
        std::uint64_t seed = 0xC0FFEE00ULL + i;
        TestRng rng(seed);
        RootSpec s = random_continuous_spec(rng);
        if (s.degree() < 1 || s.degree() > 10) continue;
        cont.push_back(make_entry(seed, std::move(s), true));
    }
    write_corpus(dir + "/kernel_corpus.txt", "continuous", cont);

    std::vector<CorpusEntry> disc;
    disc.push_back(make_entry(0, RootSpec{{lin(1, 1), lin(-1, 1)}}, false));  // x^2-1
    disc.push_back(make_entry(0, RootSpec{{one(2)}}, false));                 // (x-1)^2
    disc.push_back(make_entry(0, RootSpec{{one(3)}}, false));
    disc.push_back(make_entry(0, RootSpec{{lin(0, 3)}}, false));              // x^3
    disc.push_back(make_entry(0, RootSpec{{lin(0, 2), one(1)}}, false));
    disc.push_back(make_entry(0, RootSpec{{ipair(1, 1), one(1)}}, false));
    disc.push_back(make_entry(0, RootSpec{{ipair(1, 2)}}, false));
    disc.push_back(make_entry(0, RootSpec{{lin(-1, 2)}}, false));
    disc.push_back(make_entry(0, RootSpec{{lin(2, 1), lin(0, 1)}}, false));
    disc.push_back(make_entry(0, RootSpec{{pairf(1, 1, 1)}}, false));
    disc.push_back(make_entry(0, RootSpec{{one(1)}}, false));
    disc.push_back(make_entry(0, RootSpec{{lin(-2, 1)}}, false));
    for (std::uint64_t i = 1; disc.size() < 220; ++i) {
        std::uint64_t seed = 0xD15C0000ULL + i;
        TestRng rng(seed);
        int unit_mult = static_cast<int>(i % 4);  // root-at-1 multiplicities 0..3 round-robin
        RootSpec s = random_discrete_spec(rng, unit_mult);
        if (s.degree() < 1 || s.degree() > 10) continue;
        disc.push_back(make_entry(seed, std::move(s), false));
    }
    write_corpus(dir + "/discrete_corpus.txt", "discrete", disc);
    return 0;
}
