#include "ltibound/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ltibound {

MatrixParseError::MatrixParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    int line, column;
};

// Whitespace-separated tokens with '#'-to-eol comments stripped.
std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> toks;
    std::string lbuf;
    int lineno = 0;
    while (std::getline(in, lbuf)) {
        ++lineno;
        for (size_t i = 0; i < lbuf.size();) {
            if (lbuf[i] == '#') break;
            if (std::isspace(static_cast<unsigned char>(lbuf[i]))) {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < lbuf.size() && !std::isspace(static_cast<unsigned char>(lbuf[j])) &&
                   lbuf[j] != '#')
                ++j;
            toks.push_back({lbuf.substr(i, j - i), lineno, static_cast<int>(i) + 1});
            i = j;
        }
    }
    return toks;
}

Int parse_int(const Token& t) {
    const std::string& s = t.text;
    size_t k = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (k == s.size()) throw MatrixParseError(t.line, t.column, "expected an integer, got '" + s + "'");
    for (size_t i = k; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw MatrixParseError(t.line, t.column, "expected an integer, got '" + s + "'");
    return Int(s[0] == '+' ? s.substr(1) : s, 10);  // mpz rejects a leading '+'
}

int parse_dim(const Token& t, const char* what) {
    Int v = parse_int(t);
    if (v < 1 || v > 4096) throw MatrixParseError(t.line, t.column, std::string(what) + " out of range");
    return static_cast<int>(v.get_si());
}

}  // namespace

RatMatrix read_matrix(std::istream& in) {
    std::vector<Token> toks = tokenize(in);
    size_t pos = 0;
    auto next = [&](const char* what) -> const Token& {
        if (pos >= toks.size()) {
            int l = toks.empty() ? 1 : toks.back().line;
            throw MatrixParseError(l, 1, std::string("unexpected end of input, expected ") + what);
        }
        return toks[pos++];
    };

    int m = parse_dim(next("row count"), "row count");
    int n = parse_dim(next("column count"), "column count");
    const Token& qt = next("denominator");
    Int q = parse_int(qt);
    if (q <= 0) throw MatrixParseError(qt.line, qt.column, "denominator must be positive");

    IntMatrix b(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = parse_int(next("matrix entry"));

    if (pos != toks.size())
        throw MatrixParseError(toks[pos].line, toks[pos].column,
                               "trailing input after last matrix entry");
    return RatMatrix(std::move(b), std::move(q));
}

RatMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_matrix(in);
}

void write_matrix(const RatMatrix& a, std::ostream& out) {
    out << a.num.rows() << " " << a.num.cols() << " " << a.den.get_str() << "\n";
    for (int i = 0; i < a.num.rows(); ++i) {
        for (int j = 0; j < a.num.cols(); ++j) {
            if (j) out << " ";
            out << a.num.at(i, j).get_str();
        }
        out << "\n";
    }
}

}  // namespace ltibound
