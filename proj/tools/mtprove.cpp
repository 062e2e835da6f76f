#include "mtprove/analysis.hpp"
#include "mtprove/certificate_io.hpp"
#include "mtprove/syntax.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

using namespace mtprove;

namespace {

enum Exit { Proved = 0, Disproof = 1, Failed = 2, InputError = 3 };

struct Outcome {
    int code = Proved;
    std::string out;  // standard output
    std::string err;  // diagnostics
};

struct ProveOptions {
    std::vector<std::string> goals;
    std::string script;
    bool automatic = false;
    int precision = 10000;
    std::string out;
    int samples = 0;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

Outcome prove_one(const std::string& path, const ProveOptions& opt, const std::string& out_path) {
    Outcome o;
    Goal goal;
    std::optional<Script> script;
    try {
        goal = parse_goal(read_file(path));
        if (!opt.script.empty()) script = parse_script(read_file(opt.script));
    } catch (const std::exception& e) {
        o.code = InputError;
        o.err = path + ": input error: " + e.what() + "\n";
        return o;
    }
    if (opt.samples) {
        try {
            o.out += sample_plot_data(goal, opt.samples);
        } catch (const std::exception& e) {
            o.code = InputError;
            o.err = path + ": input error: " + e.what() + "\n";
            return o;
        }
    }
    try {
        if (auto c = numeric_falsify(goal)) {
            o.code = Disproof;
            o.err = path + ": disproved: value " + c->value.str(10) + " at " + std::string(1, var_name(goal.var)) +
                    " = " + c->point.str(20) + "\n";
            return o;
        }
        ProverConfig cfg;
        cfg.prec = Precision{20, opt.precision};
        Certificate cert = script ? run_script(goal, *script, cfg) : auto_certificate(goal, cfg);
        CheckResult check = verify_certificate(cert, cfg.prec);
        if (!check.accepted) throw Error("internal check rejected the certificate: " + check.reason);
        const std::string doc = to_json(cert);
        if (!out_path.empty()) write_file(out_path, doc);
        else if (!opt.samples) o.out += doc;
        o.err = path + ": proved (" + std::to_string(cert.stats.nodes) + " steps, " +
                std::to_string(cert.stats.sturm_leaves) + " Sturm leaves, max degree " +
                std::to_string(cert.stats.max_poly_degree) + ", max " + std::to_string(cert.stats.max_digits) +
                " digits)\n";
    } catch (const Disproved& e) {
        o.code = Disproof;
        o.err = path + ": disproved: " + e.what() + "\n";
    } catch (const std::exception& e) {
        o.code = Failed;
        o.err = path + ": failed: " + e.what() + "\n";
    }
    return o;
}

int run_prove(const ProveOptions& opt) {
    if (opt.precision < 20) {
        std::cerr << "input error: precision must be at least 20 digits\n";
        return InputError;
    }
    if (opt.goals.size() > 1 && !opt.script.empty()) {
        std::cerr << "input error: --script takes a single goal\n";
        return InputError;
    }
    std::vector<std::string> outs(opt.goals.size());
    if (!opt.out.empty() && opt.goals.size() > 1) {
        std::error_code ec;
        std::filesystem::create_directories(opt.out, ec);
        for (std::size_t i = 0; i < outs.size(); ++i)
            outs[i] = (std::filesystem::path(opt.out) / std::filesystem::path(opt.goals[i]).stem()).string() + ".cert.json";
    } else if (!opt.out.empty()) {
        outs[0] = opt.out;
    }
    std::vector<std::future<Outcome>> jobs;
    for (std::size_t i = 0; i < opt.goals.size(); ++i)
        jobs.push_back(std::async(std::launch::async, prove_one, opt.goals[i], std::cref(opt), outs[i]));
    int code = Proved;
    for (auto& j : jobs) {
        Outcome o = j.get();
        std::cout << o.out << std::flush;
        std::cerr << o.err << std::flush;
        code = std::max(code, o.code);
    }
    return code;
}

int run_check(const std::string& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return InputError;
    }
    CheckOutcome r = check_document(text);
    switch (r.kind) {
    case CheckOutcome::Accepted: std::cout << "accepted\n"; return Proved;
    case CheckOutcome::Rejected: std::cout << "rejected: " << r.message << "\n"; return Failed;
    case CheckOutcome::InputError: std::cerr << "input error: " << r.message << "\n"; return InputError;
    }
    return Failed;
}

int run_limits() {
    bool ok = true;
    for (const auto& r : conjecture_limits()) {
        const bool conv = limit_converges(r, 6, Real("1e-3"));
        std::cout << format_report(r) << "  " << (conv ? "converges" : "does not converge")
                  << " within 1e-3 by k = 6 (extrapolated), errors non-increasing in k\n\n";
        ok = ok && conv;
    }
    std::cout << "limit point: x -> 1- (x ranges over (0, 1))\n";
    return ok ? Proved : Failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prover for strict positivity of mixed trigonometric polynomials"};
    app.require_subcommand(1);

    ProveOptions popt;
    auto* prove = app.add_subcommand("prove", "prove goal files");
    prove->add_option("goal", popt.goals, "goal file(s)")->required();
    auto* script_opt = prove->add_option("--script", popt.script, "proof script");
    prove->add_flag("--auto", popt.automatic, "automatic proof search (default without --script)")->excludes(script_opt);
    prove->add_option("--precision", popt.precision, "precision cap in decimal digits");
    prove->add_option("--out", popt.out, "certificate file (directory for several goals)");
    prove->add_option("--emit-samples", popt.samples, "write n samples of the goal as CSV to standard output");

    std::string cert_path;
    auto* check = app.add_subcommand("check", "verify a certificate");
    check->add_option("certificate", cert_path, "certificate file")->required();

    auto* limits = app.add_subcommand("limits", "numeric limit checks for the two conjecture constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return InputError;
    }
    try {
        if (*prove) return run_prove(popt);
        if (*check) return run_check(cert_path);
        if (*limits) return run_limits();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failed;
    }
    return InputError;
}
