#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eigenfloor/bounds.hpp"
#include "eigenfloor/dqds.hpp"
#include "eigenfloor/eigen_oracle.hpp"
#include "eigenfloor/errors.hpp"
#include "eigenfloor/extremal.hpp"
#include "eigenfloor/format.hpp"
#include "eigenfloor/matrix_io.hpp"
#include "eigenfloor/sweep.hpp"
#include "eigenfloor/traces.hpp"

namespace eigenfloor::cli {

namespace {

void kv(std::ostream& out, const char* key, double v) { out << key << '=' << format_real(v) << '\n'; }
void kv(std::ostream& out, const char* key, long long v) { out << key << '=' << v << '\n'; }

void print_list(std::ostream& out, const char* key, const std::vector<double>& v) {
    out << key << '=';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << format_real(v[i]);
    out << '\n';
}

TracePair traces_of(const MatrixInput& input) {
    if (const auto* t = std::get_if<SymTridiagonal>(&input)) {
        const ShiftedTracePair st = shifted_traces(*t, 0.0);
        return {st.a_shift, st.b_shift, static_cast<int>(t->size())};
    }
    return traces_fast(std::get<LowerBidiagonal>(input));
}

TracePair triple(const std::vector<double>& v) {
    const double m = v.at(2);
    if (m != static_cast<int>(m)) throw ParseError("m must be an integer");
    return {v[0], v[1], static_cast<int>(m)};
}

struct BoundsArgs {
    std::string file;
    std::vector<double> traces;
};

int cmd_bounds(const BoundsArgs& args, std::ostream& out) {
    TracePair tp;
    if (!args.traces.empty()) {
        tp = triple(args.traces);
    } else if (!args.file.empty()) {
        tp = traces_of(read_matrix_file(args.file));
    } else {
        throw ParseError("bounds: give a matrix file or --traces a b m");
    }
    const BoundReport r = bound_report(tp);
    kv(out, "a", tp.a);
    kv(out, "b", tp.b);
    kv(out, "m", static_cast<long long>(tp.m));
    kv(out, "newton", r.newton);
    kv(out, "bailey", r.bailey);
    kv(out, "householder", r.householder);
    kv(out, "laguerre", r.laguerre);
    kv(out, "alpha", r.alpha);
    kv(out, "q", static_cast<long long>(r.q));
    kv(out, "gap_upper", r.gap_upper);
    kv(out, "gap_ratio", r.gap_ratio);
    return kOk;
}

struct SweepArgs {
    int m = 5;
    long long samples = 10000;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
    if (args.m < 2) throw DomainError("sweep: m must be at least 2");
    if (args.samples < 1) throw DomainError("sweep: samples must be at least 1");
    const auto rows = sweep_rows(args.m, args.samples, args.seed);
    if (args.out.empty() || args.out == "-") {
        write_sweep_csv(out, rows);
        return kOk;
    }
    std::ofstream f(args.out);
    if (!f) throw IoError("cannot write " + args.out);
    write_sweep_csv(f, rows);
    if (!f.flush()) throw IoError("write failed for " + args.out);
    return kOk;
}

struct ExtremalArgs {
    std::vector<double> traces;
    double epsilon = 1e-8;
    double tol = 1e-6;
};

int cmd_extremal(const ExtremalArgs& args, std::ostream& out) {
    const TracePair tp = triple(args.traces);
    const AttainabilityReport r = verify_attainability(tp, args.epsilon, args.tol);
    kv(out, "laguerre_bound", r.laguerre_bound);
    kv(out, "laguerre_lambda_min", r.laguerre_lambda_min);
    kv(out, "laguerre_rel_gap", r.laguerre_rel_gap);
    kv(out, "gap_upper", r.gap_upper);
    kv(out, "gap_lambda_min", r.gap_lambda_min);
    kv(out, "gap_rel_gap", r.gap_rel_gap);
    kv(out, "epsilon", r.epsilon);
    kv(out, "tol", r.tol);
    out << "status=" << (r.pass ? "pass" : "fail") << '\n';
    return r.pass ? kOk : kVerificationFailed;
}

struct DqdsArgs {
    std::string file;
    std::string strategy = "laguerre";
    std::string log;
    double tol = 1e-15;
};

void write_dqds_log(const std::string& path, const DqdsReport& r) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path);
    f << "sweep_id,shift,smallest_q\n";
    for (const auto& e : r.log) f << e.sweep << ',' << format_real(e.shift) << ',' << format_real(e.smallest_q) << '\n';
    if (!f.flush()) throw IoError("write failed for " + path);
}

void print_dqds(std::ostream& out, const DqdsReport& r, ShiftKind kind) {
    out << "strategy=" << to_string(kind) << '\n';
    kv(out, "iterations", static_cast<long long>(r.iterations));
    kv(out, "failures", static_cast<long long>(r.failures));
    print_list(out, "singular_values", r.singular_values);
}

int cmd_dqds(const DqdsArgs& args, std::ostream& out, std::ostream& err) {
    const MatrixInput input = read_matrix_file(args.file);
    const auto* b = std::get_if<LowerBidiagonal>(&input);
    if (!b) throw ParseError("dqds needs a 'bidiag' matrix file");
    ShiftStrategy strategy;
    strategy.kind = parse_shift_kind(args.strategy);
    DqdsOptions opts;
    opts.tol = args.tol;
    try {
        const DqdsReport r = run_dqds(*b, strategy, opts);
        print_dqds(out, r, strategy.kind);
        if (!args.log.empty()) write_dqds_log(args.log, r);
        return kOk;
    } catch (const DqdsConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        print_dqds(out, e.partial(), strategy.kind);
        if (!args.log.empty()) write_dqds_log(args.log, e.partial());
        return kConvergenceFailed;
    }
}

struct OracleArgs {
    std::string file;
    double tol = 0.0;
};

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
    const MatrixInput input = read_matrix_file(args.file);
    if (const auto* t = std::get_if<SymTridiagonal>(&input)) {
        print_list(out, "eigenvalues", full_spectrum(*t, args.tol).values);
        if (t->is_positive_definite()) {
            const TracePair tp = traces_of(input);
            kv(out, "a", tp.a);
            kv(out, "b", tp.b);
        }
        return kOk;
    }
    const auto& b = std::get<LowerBidiagonal>(input);
    print_list(out, "singular_values", bidiagonal_singular_values(b, args.tol).values);
    const TracePair fast = traces_fast(b);
    const TracePair slow = traces_oracle(b);
    kv(out, "a", fast.a);
    kv(out, "b", fast.b);
    kv(out, "a_oracle", slow.a);
    kv(out, "b_oracle", slow.b);
    return kOk;
}

struct GenArgs {
    std::size_t m = 100;
    std::uint64_t seed = 100;
    double lo = 0.1;
    double hi = 10.0;
    std::string out;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
    if (args.m < 2) throw DomainError("gen: m must be at least 2");
    if (!(args.lo > 0.0 && args.hi >= args.lo)) throw DomainError("gen: need 0 < lo <= hi");
    const LowerBidiagonal b = random_bidiagonal(args.m, args.seed, args.lo, args.hi);
    if (args.out.empty() || args.out == "-") {
        write_matrix(out, b);
        return kOk;
    }
    std::ofstream f(args.out);
    if (!f) throw IoError("cannot write " + args.out);
    write_matrix(f, b);
    if (!f.flush()) throw IoError("write failed for " + args.out);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trace-based lower bounds on the smallest eigenvalue of SPD matrices"};
    app.require_subcommand(1);

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Evaluate all bounds for a matrix file or a trace triple");
    bounds->add_option("file", bounds_args.file, "tri or bidiag matrix file");
    bounds->add_option("--traces", bounds_args.traces, "a b m")->expected(3);

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Random normalized spectra with their bounds, as CSV");
    sweep->add_option("--m", sweep_args.m, "dimension")->capture_default_str();
    sweep->add_option("--samples", sweep_args.samples, "number of spectra")->capture_default_str();
    sweep->add_option("--seed", sweep_args.seed, "RNG seed")->capture_default_str();
    sweep->add_option("--out", sweep_args.out, "output path (default stdout)");

    ExtremalArgs ext_args;
    auto* ext = app.add_subcommand("extremal", "Build both extremal spectra and check attainability");
    ext->add_option("--traces", ext_args.traces, "a b m")->expected(3)->required();
    ext->add_option("--epsilon", ext_args.epsilon, "reciprocal standing in for infinite eigenvalues")
        ->capture_default_str();
    ext->add_option("--tol", ext_args.tol, "relative tolerance")->capture_default_str();

    DqdsArgs dqds_args;
    auto* dqds = app.add_subcommand("dqds", "Singular values of a bidiagonal by shifted dqds");
    dqds->add_option("file", dqds_args.file, "bidiag matrix file")->required();
    dqds->add_option("--strategy", dqds_args.strategy, "zero | newton2 | laguerre")->capture_default_str();
    dqds->add_option("--log", dqds_args.log, "per-sweep CSV log path");
    dqds->add_option("--tol", dqds_args.tol, "deflation tolerance")->capture_default_str();

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Bisection eigenvalues / singular values and traces");
    oracle->add_option("file", oracle_args.file, "tri or bidiag matrix file")->required();
    oracle->add_option("--tol", oracle_args.tol, "bisection tolerance (0: full resolution)")->capture_default_str();

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Write a random bidiagonal matrix file");
    gen->add_option("--m", gen_args.m, "dimension")->capture_default_str();
    gen->add_option("--seed", gen_args.seed, "RNG seed")->capture_default_str();
    gen->add_option("--lo", gen_args.lo, "smallest entry magnitude")->capture_default_str();
    gen->add_option("--hi", gen_args.hi, "largest entry magnitude")->capture_default_str();
    gen->add_option("--out", gen_args.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (*bounds) return cmd_bounds(bounds_args, out);
        if (*sweep) return cmd_sweep(sweep_args, out);
        if (*ext) return cmd_extremal(ext_args, out);
        if (*dqds) return cmd_dqds(dqds_args, out, err);
        if (*oracle) return cmd_oracle(oracle_args, out);
        if (*gen) return cmd_gen(gen_args, out);
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << '\n';
        return kParseError;
    } catch (const IoError& e) {
        err << "error: io: " << e.what() << '\n';
        return kIoError;
    } catch (const ConvergenceError& e) {
        err << "error: convergence: " << e.what() << '\n';
        return kConvergenceFailed;
    } catch (const Error& e) {
        // domain, singular, not positive definite, overflow
        err << "error: infeasible: " << e.what() << '\n';
        return kInfeasible;
    }
    return kParseError;
}

}  // namespace eigenfloor::cli
