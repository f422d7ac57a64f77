#include "ltibound/cli.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "ltibound/elimination.hpp"
#include "ltibound/matrix_io.hpp"
#include "ltibound/minimal_polynomial.hpp"
#include "ltibound/moebius.hpp"
#include "ltibound/pipeline.hpp"

namespace ltibound {

namespace {

constexpr const char* kUsage =
    "usage:\n"
    "  decide --mode {continuous|discrete} FILE [--trace] [--no-timings]\n"
    "      YES/NO: are all trajectories of the system given by FILE bounded?\n"
    "      exit code 0 = YES, 1 = NO, 2 = error\n"
    "  minpoly FILE\n"
    "      integer-scaled minimal polynomial coefficients, leading first\n"
    "  check-poly [--discrete] [--trace] [--no-timings] C0 C1 ... CD\n"
    "      YES/NO: root condition for the polynomial with the given\n"
    "      coefficients (leading first); exit codes as for decide\n"
    "  det FILE\n"
    "      exact determinant of the matrix in FILE\n"
    "\n"
    "matrix file: header 'm n q' (q > 0), then m rows of n integers;\n"
    "'#' starts a comment. The matrix is the integer array divided by q.\n";

bool is_integer_token(const std::string& s) {
    size_t k = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (k == s.size()) return false;
    for (size_t i = k; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

int verdict_exit(bool yes, std::ostream& out) {
    out << (yes ? "YES" : "NO") << "\n";
    return yes ? 0 : 1;
}

struct DecideOpts {
    std::string mode;
    std::string file;
    bool trace = false;
    bool timings = true;
};

int cmd_decide(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    DecideOpts o;
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--trace") {
            o.trace = true;
        } else if (a == "--no-timings") {
            o.timings = false;
        } else if (a == "--mode") {
            if (i + 1 == args.size()) {
                err << "decide: --mode needs a value\n";
                return 2;
            }
            o.mode = args[++i];
        } else if (a.rfind("--mode=", 0) == 0) {
            o.mode = a.substr(7);
        } else if (!a.empty() && a[0] == '-') {
            err << "decide: unknown option '" << a << "'\n";
            return 2;
        } else if (o.file.empty()) {
            o.file = a;
        } else {
            err << "decide: more than one input file\n";
            return 2;
        }
    }
    if (o.mode != "continuous" && o.mode != "discrete") {
        err << "decide: --mode must be 'continuous' or 'discrete'\n";
        return 2;
    }
    if (o.file.empty()) {
        err << "decide: no input file\n";
        return 2;
    }
    RatMatrix a = read_matrix_file(o.file);
    DecisionReport rep = o.mode == "continuous" ? decide_continuous(a) : decide_discrete(a);
    int rc = verdict_exit(rep.bounded, out);
    if (o.trace) render_report(rep, out, o.timings);
    return rc;
}

int cmd_minpoly(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.size() != 2) {
        err << "minpoly: expected exactly one input file\n";
        return 2;
    }
    RatMatrix a = read_matrix_file(args[1]);
    if (!a.num.is_square()) {
        err << "minpoly: matrix must be square\n";
        return 2;
    }
    // The denominator rescales roots but not the annihilation structure;
    // report the polynomial of the integer part as the exact object.
    ScaledMinimalPolynomial p = minimal_polynomial(a.num);
    out << p.e0.get_str();
    for (const Int& e : p.tail) out << " " << e.get_str();
    out << "\n";
    return 0;
}

int cmd_check_poly(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    bool discrete = false, trace = false, timings = true;
    std::vector<Int> coeffs;
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--discrete") {
            discrete = true;
        } else if (a == "--trace") {
            trace = true;
        } else if (a == "--no-timings") {
            timings = false;
        } else if (is_integer_token(a)) {
            coeffs.emplace_back(a[0] == '+' ? a.substr(1) : a, 10);  // mpz rejects '+'
        } else {
            err << "check-poly: '" << a << "' is not an integer coefficient\n";
            return 2;
        }
    }
    (void)timings;  // no timing lines in the polynomial-only trace
    IntPoly p{std::vector<Int>(coeffs)};
    if (coeffs.empty() || p.is_zero()) {
        err << "check-poly: need a nonzero polynomial\n";
        return 2;
    }
    if (p.degree() == 0) {
        int rc = verdict_exit(true, out);  // no roots
        if (trace) out << "kernel_input: " << p.to_string() << "\n";
        return rc;
    }

    std::optional<MoebiusResult> mb;
    IntPoly kin = p;
    if (discrete) {
        mb = moebius_transform(p);
        kin = mb->output;
    }
    KernelVerdict v = has_boundedness_property(kin);
    int rc = verdict_exit(v.bounded, out);
    if (trace) {
        out << "input: " << p.to_string() << "\n";
        if (mb) {
            out << "transformed: " << mb->transformed.to_string() << "\n";
            out << "unit_root_multiplicity: " << mb->delta << "\n";
        }
        out << "kernel_input: " << kin.to_string() << "\n";
        render_kernel_trace(v, out);
    }
    return rc;
}

int cmd_det(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.size() != 2) {
        err << "det: expected exactly one input file\n";
        return 2;
    }
    RatMatrix a = read_matrix_file(args[1]);
    if (!a.num.is_square()) {
        err << "det: matrix must be square\n";
        return 2;
    }
    // det(B/q) = det(B)/q^n, reduced to lowest terms.
    Rat det(determinant(a.num));
    Rat qn(a.den);
    for (int i = 1; i < a.num.rows(); ++i) qn *= a.den;
    det /= qn;
    det.canonicalize();
    out << det.get_str() << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
        (args.empty() ? err : out) << kUsage;
        return args.empty() ? 2 : 0;
    }
    try {
        if (args[0] == "decide") return cmd_decide(args, out, err);
        if (args[0] == "minpoly") return cmd_minpoly(args, out, err);
        if (args[0] == "check-poly") return cmd_check_poly(args, out, err);
        if (args[0] == "det") return cmd_det(args, out, err);
        err << "unknown subcommand '" << args[0] << "'\n" << kUsage;
        return 2;
    } catch (const std::exception& e) {
        err << args[0] << ": " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ltibound
