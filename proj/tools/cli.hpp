#pragma once

// Command-line front end. `run` takes the arguments after the program name and writes to
// the given streams so tests can drive it in-process.
//
// Exit codes:
//   0  success
//   1  a verification suite reported a failure
//   2  usage or parse error
//   3  inadmissible step in a word (message names the step)
//   4  any other computation error (window too small, normalization mismatch, ...)

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tau/format.hpp"
#include "tau/reduction.hpp"
#include "tau/tau_engine.hpp"
#include "tau/verifiers.hpp"

namespace tau::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInadmissible = 3, kComputation = 4 };

struct CliConfig {
    std::string command;
    std::optional<std::string> partition;
    std::optional<std::string> frobenius;
    std::optional<std::string> word;
    std::string format = "text";
    bool normalized = false;
    int weight_index = 0;
    std::optional<int> modulus;
    int max_cells = 8;
    std::uint64_t seed = 0;
    std::optional<int> window;
    unsigned jobs = 1;
    bool verbose = false;
    std::string suite;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "relations",   "theorem1", "theorem2", "cocycle-equivalence", "order-independence",
        "plucker",     "hook-recurrence", "normalization", "corollary", "lemma5",
        "tau-consistency", "remark2", "reduction"};
    return names;
}

namespace detail {

inline Partition input_partition(const CliConfig& cfg) {
    if (cfg.partition) return Partition::parse(*cfg.partition);
    return frobenius_to_partition(FrobeniusSymbol::parse(*cfg.frobenius));
}

inline void require_modulus(const std::optional<int>& n) {
    if (n && *n < 2) throw ParseError("--modulus must be at least 2");
}

}  // namespace detail

/// phi_w(Lambda_j) for the configured input. A word is followed strictly: every step must add
/// a node. Partitions go through the Frobenius determinant.
inline PhiOutput compute_output(const CliConfig& cfg) {
    const int given = int(cfg.partition.has_value()) + int(cfg.frobenius.has_value()) + int(cfg.word.has_value());
    if (given != 1) throw ParseError("compute needs exactly one of --partition, --frobenius, --word");
    detail::require_modulus(cfg.modulus);
    const int j = cfg.weight_index;

    PhiOutput out;
    int shift = j;
    if (cfg.word) {
        const WeylWord w = WeylWord::parse(*cfg.word);
        const WeylWord conj = w.shifted(-j);
        out.phi = apply_pi(j, phi_cocycle(conj));
        out.shape = orbit_partition(conj.acting_order());
        shift += w.pi_power;
    } else {
        out.shape = detail::input_partition(cfg);
        out.phi = apply_pi(j, phi_theorem1(out.shape));
    }
    for (const auto& [i, m] : m_coefficients(out.shape)) out.tau_monomial[i + shift] = m;
    out.normalized = cfg.normalized;
    if (cfg.normalized)
        for (const VDifference& h : hook_forms(out.shape)) out.denominator.push_back(h.shifted(shift).to_polynomial());

    if (cfg.modulus) {
        const int n = *cfg.modulus;
        out.modulus = n;
        out.phi = reduce_poly(out.phi, n);
        for (Polynomial& h : out.denominator) h = reduce_poly(h, n);
        std::map<int, int> folded;
        for (const auto& [i, m] : out.tau_monomial) folded[((i % n) + n) % n] += m;
        out.tau_monomial.clear();
        for (const auto& [i, m] : folded)
            if (m != 0) out.tau_monomial[i] = m;
    }
    return out;
}

inline int cmd_compute(const CliConfig& cfg, std::ostream& out) {
    const PhiOutput result = compute_output(cfg);
    if (cfg.format == "json") out << format_json(result) << "\n";
    else if (cfg.format == "latex") out << format_latex(result) << "\n";
    else out << format_text(result) << "\n";
    return kOk;
}

inline VerificationReport run_suite(const CliConfig& cfg) {
    const std::string& s = cfg.suite;
    const int cells = cfg.max_cells;
    if (s == "relations") {
        const int w = cfg.window.value_or(4);
        return verify_relations(-w, w);
    }
    if (s == "theorem1") return verify_theorem1(cells, cfg.jobs);
    if (s == "theorem2") return verify_theorem2(cells, cfg.jobs);
    if (s == "cocycle-equivalence") return verify_three_way(cells, cfg.jobs);
    if (s == "order-independence") return verify_order_independence(cells, 20, cfg.seed);
    if (s == "plucker") return verify_plucker(10);
    if (s == "hook-recurrence") return verify_hook_recurrences(5, 4);
    if (s == "normalization") return verify_normalization(cells);
    if (s == "corollary") return verify_corollary_suite(cells);
    if (s == "lemma5") return verify_lemma5(cfg.seed);
    if (s == "tau-consistency") return verify_tau_consistency_suite(cells, {-1, 0, 1});
    if (s == "remark2") return verify_remark2_suite(cells, {-1, 0, 1});
    if (s == "reduction") {
        detail::require_modulus(cfg.modulus);
        return verify_reduction_suite(cfg.modulus.value_or(3), 6);
    }
    throw ParseError("unknown suite '" + s + "'");
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    const VerificationReport report = run_suite(cfg);
    report.print(out, cfg.verbose);
    return report.passed() ? kOk : kVerifyFailed;
}

/// Minor of the frame on the Maya columns of lambda, compared with phi~.
inline int cmd_frame(const CliConfig& cfg, std::ostream& out) {
    if (!cfg.partition && !cfg.frobenius) throw ParseError("frame needs --partition or --frobenius");
    const Partition lambda = detail::input_partition(cfg);
    const int window = cfg.window.value_or(std::max(lambda.length(), lambda.part(1)));
    const RationalFunction minor = frame_minor(lambda, window).cancelled();
    const bool agrees = rat_equal(minor, phi_tilde(lambda));
    out << "frame minor (" << lambda.to_string() << "), window " << window << ": " << minor.to_string() << "\n";
    out << "equals normalized phi: " << (agrees ? "yes" : "no") << "\n";
    return agrees ? kOk : kVerifyFailed;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"tau polynomials of the A-infinity Weyl group orbit", "tau_cli"};
    app.require_subcommand(1);

    auto add_input = [&cfg](CLI::App* sub) {
        sub->add_option("--partition", cfg.partition, "partition, e.g. \"2,2,1\" (empty for the empty diagram)");
        sub->add_option("--frobenius", cfg.frobenius, "Frobenius symbol, e.g. \"I=2,1;J=1,0\"");
    };

    CLI::App* compute = app.add_subcommand("compute", "compute phi_w(Lambda_j) or its normalized form");
    add_input(compute);
    compute->add_option("--word", cfg.word, "Weyl word, e.g. \"s0 s-1 s1 s0\" (rightmost acts first)");
    compute->add_option("--format", cfg.format, "text, latex or json")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    compute->add_flag("--normalized", cfg.normalized, "divide by the hook normalization factor");
    compute->add_option("-j,--weight-index", cfg.weight_index, "fundamental weight index j");
    compute->add_option("--modulus", cfg.modulus, "reduce indices mod N (N >= 2)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-cells", cfg.max_cells, "largest diagram size checked (<= 12)")
        ->check(CLI::Range(0, 12));
    verify->add_option("--seed", cfg.seed, "seed for randomized suites");
    verify->add_option("--window", cfg.window, "relations: generators s_-W..s_W");
    verify->add_option("--modulus", cfg.modulus, "reduction: N (default 3)");
    verify->add_option("--jobs", cfg.jobs, "worker threads for partition sweeps")->check(CLI::Range(1U, 256U));
    verify->add_flag("-v,--verbose", cfg.verbose, "list passing checks too");

    CLI::App* frame = app.add_subcommand("frame", "minor of the universal Grassmannian frame");
    add_input(frame);
    frame->add_option("--window", cfg.window, "number of frame rows");

    std::vector<const char*> argv{"tau_cli"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*compute) return cmd_compute(cfg, out);
        if (*verify) return cmd_verify(cfg, out);
        return cmd_frame(cfg, out);
    } catch (const InadmissibleStep& e) {
        err << "error: " << e.what() << "\n";
        return kInadmissible;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kComputation;
    }
}

}  // namespace tau::cli
