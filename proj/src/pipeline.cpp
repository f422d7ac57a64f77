#include "ltibound/pipeline.hpp"

#include <chrono>
#include <ostream>

namespace ltibound {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const char* status_name(ChainStatus s) {
    switch (s) {
        case ChainStatus::AllNonzeroMinors: return "AllNonzeroMinors";
        case ChainStatus::S1: return "S1";
        case ChainStatus::S2: return "S2";
        case ChainStatus::NotStepOne: return "NotStepOne";
    }
    return "?";
}

void render_chain(const SignChainReport& r, const char* prefix, std::ostream& os) {
    os << prefix << "_status: " << status_name(r.status) << "\n";
    os << prefix << "_m: " << r.m << "\n";
    os << prefix << "_signs:";
    for (int s : r.leading_signs) os << " " << (s > 0 ? "+" : "-");
    os << "\n";
    os << prefix << "_minors:";
    for (const Int& v : r.leading_minors) os << " " << v.get_str();
    os << "\n";
}

}  // namespace

static DecisionReport decide(const RatMatrix& a, Mode mode) {
    const auto t0 = Clock::now();
    DecisionReport rep;
    rep.mode = mode;
    rep.input_bits = bit_size(a);
    rep.denominator_ignored = mode == Mode::Continuous && a.den != 1;

    const auto t_min = Clock::now();
    rep.minimal_poly = minimal_polynomial(a.num, &rep.minpoly_stats);
    rep.minpoly_ms = ms_since(t_min);

    const auto t_ker = Clock::now();
    if (mode == Mode::Continuous) {
        // Positive rescaling of time: the denominator cannot change the verdict.
        rep.kernel_input = rep.minimal_poly.as_poly();
    } else {
        // Substitute x -> den*x into the minimal polynomial of num and clear
        // denominators, giving an integer polynomial with the eigenvalues of
        // num/den as roots; then transport the disc condition.
        const int d = rep.minimal_poly.degree();
        const IntPoly p = rep.minimal_poly.as_poly();
        std::vector<Int> c(static_cast<size_t>(d) + 1);
        Int qpow = 1;
        for (int l = d; l >= 0; --l) {  // coefficient of x^{d-l} is e_l * den^{d-l}
            c[static_cast<size_t>(l)] = p.coeff(d - l) * qpow;
            qpow *= a.den;
        }
        rep.moebius = moebius_transform(IntPoly(std::move(c)));
        rep.kernel_input = rep.moebius->output;
    }
    rep.kernel = has_boundedness_property(rep.kernel_input);
    rep.kernel_ms = ms_since(t_ker);

    rep.bounded = rep.kernel.bounded;
    rep.total_ms = ms_since(t0);
    return rep;
}

DecisionReport decide_continuous(const RatMatrix& a) {
    if (!a.num.is_square() || a.num.rows() == 0)
        throw std::invalid_argument("decide_continuous: need a nonempty square matrix");
    return decide(a, Mode::Continuous);
}

DecisionReport decide_discrete(const RatMatrix& a) {
    if (!a.num.is_square() || a.num.rows() == 0)
        throw std::invalid_argument("decide_discrete: need a nonempty square matrix");
    return decide(a, Mode::Discrete);
}

void render_kernel_trace(const KernelVerdict& v, std::ostream& os) {
    render_chain(v.phase1, "phase1", os);
    if (v.ext) render_chain(*v.ext, "ext", os);
    if (!v.p_ext0.is_zero()) os << "terminal_polynomial: " << v.p_ext0.to_string() << "\n";
    if (!v.bounded) os << "failing_condition: " << v.failing_condition << "\n";
}

void render_report(const DecisionReport& rep, std::ostream& os, bool include_timings) {
    os << "verdict: " << (rep.bounded ? "bounded" : "unbounded") << "\n";
    os << "mode: " << (rep.mode == Mode::Continuous ? "continuous" : "discrete") << "\n";
    os << "input_bits: " << rep.input_bits << "\n";
    os << "denominator_ignored: " << (rep.denominator_ignored ? "yes" : "no") << "\n";
    os << "minimal_polynomial: " << rep.minimal_poly.as_poly().to_string() << "\n";
    os << "minimal_degree: " << rep.minimal_poly.degree() << "\n";
    if (rep.moebius) {
        os << "transformed: " << rep.moebius->transformed.to_string() << "\n";
        os << "unit_root_multiplicity: " << rep.moebius->delta << "\n";
    }
    os << "kernel_input: " << rep.kernel_input.to_string() << "\n";
    render_kernel_trace(rep.kernel, os);
    os << "minpoly_system_bits: " << rep.minpoly_stats.max_system_entry_bits << "\n";
    os << "minpoly_solver_bits: " << rep.minpoly_stats.max_solver_entry_bits << "\n";
    os << "kernel_minor_bits: " << rep.kernel.max_entry_bits << "\n";
    if (include_timings) {
        os << "minpoly_ms: " << rep.minpoly_ms << "\n";
        os << "kernel_ms: " << rep.kernel_ms << "\n";
        os << "total_ms: " << rep.total_ms << "\n";
    }
}

}  // namespace ltibound
