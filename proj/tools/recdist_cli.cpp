// Command-line front end: generates sequences, analyzes characteristic
// roots, tabulates induced-distribution limits, classifies self-convolution
// maxima, sweeps the (a,b) grid, and runs the consolidated verification
// suite. Exit codes: 0 success, 1 internal/assertion failure, 2 config error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recdist/recdist.hpp"

namespace {

using namespace recdist;

constexpr long kDefaultNCap = 2000;

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error("invalid " + what + " entry '" + item + "' (expected integers)");
        }
    }
    if (out.empty()) throw Error(what + " list is empty");
    return out;
}

RecurrenceSpec spec_from(const std::string& coeffs, const std::string& inits) {
    const auto c = parse_int_list(coeffs, "--coeffs");
    if (inits.empty()) return make_spec(c);
    return make_spec(c, parse_int_list(inits, "--inits"));
}

void enforce_n_cap(long n, bool allow_large) {
    if (n > kDefaultNCap && !allow_large)
        throw Error("N = " + std::to_string(n) + " exceeds the default cap " +
                    std::to_string(kDefaultNCap) + "; pass --allow-large-n to override");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

struct CommonOpts {
    std::string coeffs;
    std::string inits;
    std::string format = "json";
    std::string out;
    double tol = 1e-12;
    bool allow_large_n = false;
};

void add_spec_opts(CLI::App* cmd, CommonOpts& opts, bool formats_csv = true) {
    cmd->add_option("--coeffs", opts.coeffs,
                    "comma-separated recurrence coefficients a1,...,ak (all >= 1)")
        ->required();
    cmd->add_option("--inits", opts.inits,
                    "comma-separated initial values f1,...,fk (default: all ones)");
    cmd->add_option("--tol", opts.tol, "root-finding tolerance (default 1e-12)");
    cmd->add_option("--format", opts.format, "output format: json or csv")
        ->check(CLI::IsMember(formats_csv ? std::vector<std::string>{"json", "csv"}
                                          : std::vector<std::string>{"json"}));
    cmd->add_option("--out", opts.out, "write output to this path instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recdist: integer linear recurrences, the probability "
                 "distributions they induce, and their self-convolutions"};
    app.require_subcommand(1);
    app.set_config("--config");

    CommonOpts gen_opts;
    long gen_n = 0;
    auto* gen_cmd = app.add_subcommand("gen", "generate a sequence with ratio trace and root");
    add_spec_opts(gen_cmd, gen_opts);
    gen_cmd->add_option("--n", gen_n, "sequence length")->required();
    gen_cmd->add_flag("--allow-large-n", gen_opts.allow_large_n,
                      "lift the default N <= 2000 cap");

    CommonOpts roots_opts;
    auto* roots_cmd = app.add_subcommand("roots", "characteristic polynomial root analysis");
    add_spec_opts(roots_cmd, roots_opts);

    CommonOpts dist_opts;
    long dist_n = 0, dist_n_min = 0, dist_n_max = 0;
    int dist_moments = 2;
    std::string dist_table = "dist";
    auto* dist_cmd =
        app.add_subcommand("dist", "induced-distribution moments, limits, and gaps per N");
    add_spec_opts(dist_cmd, dist_opts);
    dist_cmd->add_option("--n", dist_n, "single N (shorthand for --n-min N --n-max N)");
    dist_cmd->add_option("--n-min", dist_n_min, "first N of the range");
    dist_cmd->add_option("--n-max", dist_n_max, "last N of the range");
    dist_cmd->add_option("--moments", dist_moments, "max moment order for the moments table")
        ->check(CLI::Range(1, kMaxMomentOrder));
    dist_cmd->add_option("--table", dist_table, "csv table selection: dist or moments")
        ->check(CLI::IsMember({"dist", "moments"}));
    dist_cmd->add_flag("--allow-large-n", dist_opts.allow_large_n,
                       "lift the default N <= 2000 cap");

    CommonOpts conv_opts;
    long conv_n_min = 2, conv_n_max = 60;
    auto* conv_cmd =
        app.add_subcommand("conv", "self-convolution argmax classification over an N range");
    add_spec_opts(conv_cmd, conv_opts);
    conv_cmd->add_option("--n-min", conv_n_min, "first N (default 2)");
    conv_cmd->add_option("--n-max", conv_n_max, "last N (default 60, cap 300)");

    long grid_a = 5, grid_b = 5;
    std::string sweep_format = "json", sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "limit mean/variance over the (a,b) grid");
    sweep_cmd->add_option("--grid-a", grid_a, "max a (default 5, cap 20)");
    sweep_cmd->add_option("--grid-b", grid_b, "max b (default 5, cap 20)");
    sweep_cmd->add_option("--format", sweep_format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_option("--out", sweep_out, "write output to this path instead of stdout");

    double verify_tol = 1e-12;
    std::string verify_format = "text", verify_out;
    auto* verify_cmd =
        app.add_subcommand("verify-all", "run every acceptance check and report pass/fail");
    verify_cmd->add_option("--tol", verify_tol, "root-finding tolerance fed to check 1");
    verify_cmd->add_option("--format", verify_format, "output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify_cmd->add_option("--out", verify_out, "write output to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // parse problems are config errors
    }

    try {
        if (gen_cmd->parsed()) {
            const RecurrenceSpec spec = spec_from(gen_opts.coeffs, gen_opts.inits);
            enforce_n_cap(gen_n, gen_opts.allow_large_n);
            const Sequence seq = generate(spec, gen_n);
            if (gen_opts.format == "csv")
                emit(to_csv(seq), gen_opts.out);
            else
                emit_json(gen_report(seq, analyze(spec, gen_opts.tol)), gen_opts.out);
        } else if (roots_cmd->parsed()) {
            const RecurrenceSpec spec = spec_from(roots_opts.coeffs, roots_opts.inits);
            const CharAnalysis analysis = analyze(spec, roots_opts.tol);
            if (roots_opts.format == "csv")
                emit(roots_csv(analysis), roots_opts.out);
            else
                emit_json(roots_report(spec, analysis), roots_opts.out);
        } else if (dist_cmd->parsed()) {
            const RecurrenceSpec spec = spec_from(dist_opts.coeffs, dist_opts.inits);
            long n_min = dist_n_min, n_max = dist_n_max;
            if (dist_n > 0) n_min = n_max = dist_n;
            if (n_min < 1 || n_max < n_min)
                throw Error("need --n, or --n-min <= --n-max with both >= 1");
            enforce_n_cap(n_max, dist_opts.allow_large_n);
            if (dist_opts.format == "csv" && dist_table == "moments") {
                emit(moments_csv(spec, n_min, n_max, dist_moments), dist_opts.out);
            } else {
                const DistTable table = build_dist_table(spec, n_min, n_max);
                if (dist_opts.format == "csv")
                    emit(dist_csv(table), dist_opts.out);
                else
                    emit_json(dist_report(table), dist_opts.out);
            }
        } else if (conv_cmd->parsed()) {
            const RecurrenceSpec spec = spec_from(conv_opts.coeffs, conv_opts.inits);
            const PredictionReport report = verify_prediction(spec, conv_n_min, conv_n_max);
            if (conv_opts.format == "csv")
                emit(conv_csv(spec, report), conv_opts.out);
            else
                emit_json(conv_report(spec, report), conv_opts.out);
        } else if (sweep_cmd->parsed()) {
            const SweepTable table = build_sweep_table(grid_a, grid_b);
            if (sweep_format == "csv")
                emit(sweep_csv(table), sweep_out);
            else
                emit_json(sweep_report(table), sweep_out);
        } else if (verify_cmd->parsed()) {
            const std::vector<CheckResult> checks = run_acceptance_checks(verify_tol);
            if (verify_format == "json")
                emit_json(verify_report(checks, verify_tol), verify_out);
            else if (verify_format == "csv")
                emit(verify_csv(checks), verify_out);
            else
                emit(verify_text(checks), verify_out);
            for (const CheckResult& check : checks)
                if (!check.passed) return 1;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
