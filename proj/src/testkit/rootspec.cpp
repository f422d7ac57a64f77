#include "ltibound/testkit/rootspec.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ltibound::testkit {

IntPoly Factor::base() const {
    switch (kind) {
        case Kind::RealLinear: return IntPoly{1, -a};
        case Kind::ComplexPair: return IntPoly{1, -2 * alpha, alpha * alpha + beta * beta};
        case Kind::ImagPair:
            if (b <= 0) throw std::invalid_argument("ImagPair factor needs b > 0");
            return IntPoly{1, 0, b};
        case Kind::UnitOne: return IntPoly{1, -1};
    }
    throw std::logic_error("unreachable");
}

IntPoly RootSpec::expand() const {
    IntPoly p{1};
    for (const Factor& f : factors) {
        IntPoly b = f.base();
        for (int k = 0; k < f.mult; ++k) p = p * b;
    }
    return p;
}

int RootSpec::degree() const { return expand().degree(); }

namespace {

// Roots keyed up to conjugation: reals by their value, conjugate pairs by
// (sum, product) = (2 alpha, alpha^2 + beta^2). Values never collide across
// the two families because pair keys are only used for nonreal pairs.
using RootKey = std::tuple<char, long, long>;

std::map<RootKey, long> root_multiplicities(const RootSpec& s) {
    std::map<RootKey, long> m;
    for (const Factor& f : s.factors) {
        switch (f.kind) {
            case Factor::Kind::RealLinear: m[{'r', f.a, 0}] += f.mult; break;
            case Factor::Kind::UnitOne: m[{'r', 1, 0}] += f.mult; break;
            case Factor::Kind::ComplexPair:
                if (f.beta == 0)
                    m[{'r', f.alpha, 0}] += 2L * f.mult;
                else
                    m[{'p', 2 * f.alpha, f.alpha * f.alpha + f.beta * f.beta}] += f.mult;
                break;
            case Factor::Kind::ImagPair: m[{'p', 0, f.b}] += f.mult; break;
        }
    }
    return m;
}

}  // namespace

bool continuous_bounded(const RootSpec& s) {
    for (const auto& [key, mult] : root_multiplicities(s)) {
        char fam = std::get<0>(key);
        long x = std::get<1>(key);
        long twice_re = fam == 'r' ? 2 * x : x;  // pair key stores 2*alpha
        if (twice_re > 0) return false;
        if (twice_re == 0 && mult > 1) return false;
    }
    return true;
}

bool discrete_bounded(const RootSpec& s) {
    for (const auto& [key, mult] : root_multiplicities(s)) {
        char fam = std::get<0>(key);
        long x = std::get<1>(key);
        // Squared modulus: x^2 for a real root, product of the pair otherwise.
        long mod2 = fam == 'r' ? x * x : std::get<2>(key);
        if (mod2 > 1) return false;
        if (mod2 == 1 && mult > 1) return false;
    }
    return true;
}

std::string format_entry(const CorpusEntry& e) {
    std::ostringstream os;
    os << e.seed << " ";
    for (size_t i = 0; i < e.spec.factors.size(); ++i) {
        const Factor& f = e.spec.factors[i];
        if (i) os << ",";
        switch (f.kind) {
            case Factor::Kind::RealLinear: os << "lin:" << f.a << ":" << f.mult; break;
            case Factor::Kind::ComplexPair:
                os << "pair:" << f.alpha << ":" << f.beta << ":" << f.mult;
                break;
            case Factor::Kind::ImagPair: os << "ipair:" << f.b << ":" << f.mult; break;
            case Factor::Kind::UnitOne: os << "one:" << f.mult; break;
        }
    }
    os << " " << (e.expected ? "YES" : "NO");
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long to_long(const std::string& s) {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
}

Factor parse_factor(const std::string& tok) {
    std::vector<std::string> p = split(tok, ':');
    Factor f;
    auto need = [&](size_t n) {
        if (p.size() != n) throw std::invalid_argument("bad factor token '" + tok + "'");
    };
    if (p[0] == "lin") {
        need(3);
        f.kind = Factor::Kind::RealLinear;
        f.a = to_long(p[1]);
        f.mult = static_cast<int>(to_long(p[2]));
    } else if (p[0] == "pair") {
        need(4);
        f.kind = Factor::Kind::ComplexPair;
        f.alpha = to_long(p[1]);
        f.beta = to_long(p[2]);
        f.mult = static_cast<int>(to_long(p[3]));
    } else if (p[0] == "ipair") {
        need(3);
        f.kind = Factor::Kind::ImagPair;
        f.b = to_long(p[1]);
        f.mult = static_cast<int>(to_long(p[2]));
    } else if (p[0] == "one") {
        need(2);
        f.kind = Factor::Kind::UnitOne;
        f.mult = static_cast<int>(to_long(p[1]));
    } else {
        throw std::invalid_argument("unknown factor kind '" + p[0] + "'");
    }
    if (f.mult < 1) throw std::invalid_argument("factor multiplicity must be >= 1");
    return f;
}

}  // namespace

CorpusEntry parse_entry(const std::string& line) {
    std::istringstream is(line);
    std::string seed_tok, factors_tok, verdict_tok, extra;
    if (!(is >> seed_tok >> factors_tok >> verdict_tok) || (is >> extra))
        throw std::invalid_argument("corpus line needs exactly 3 fields: '" + line + "'");
    CorpusEntry e;
    e.seed = std::stoull(seed_tok);
    for (const std::string& tok : split(factors_tok, ','))
        e.spec.factors.push_back(parse_factor(tok));
    if (verdict_tok == "YES")
        e.expected = true;
    else if (verdict_tok == "NO")
        e.expected = false;
    else
        throw std::invalid_argument("verdict must be YES or NO, got '" + verdict_tok + "'");
    return e;
}

std::vector<CorpusEntry> load_corpus(const std::string& path, const std::string& mode) {
    bool continuous = mode == "continuous";
    if (!continuous && mode != "discrete")
        throw std::invalid_argument("mode must be continuous or discrete");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus '" + path + "'");
    std::vector<CorpusEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        CorpusEntry e = parse_entry(line);
        bool truth = continuous ? continuous_bounded(e.spec) : discrete_bounded(e.spec);
        if (truth != e.expected)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": stated verdict disagrees with the factor layout");
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace ltibound::testkit
