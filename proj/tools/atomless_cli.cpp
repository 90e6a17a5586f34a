// Command-line front end: osc, witness, verify, experiment.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atomless/experiment.hpp"
#include "atomless/oscillation.hpp"
#include "atomless/text.hpp"
#include "atomless/witness.hpp"
#include "atomless/witness_io.hpp"

namespace {

using namespace atomless;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GoodSet parse_arg(const std::string& text, const char* name) {
    try {
        return parse_good_set(text);
    } catch (const ParseError& err) {
        throw UsageError(std::string(name) + ": " + err.what() + " in '" + text + "'");
    }
}

bool write_output(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return static_cast<bool>(out);
}

int cmd_osc(const std::string& a_text, const std::string& b_text, OscConvention conv, bool explain) {
    const GoodSet a = parse_arg(a_text, "set-a");
    const GoodSet b = parse_arg(b_text, "set-b");
    std::cout << osc(a, b, conv) << '\n';
    if (explain) {
        const InterestSet ia = interest(a);
        const InterestSet ib = interest(b);
        auto show = [](const InterestSet& s) {
            std::string out = "{";
            for (const auto& v : s.values()) {
                out += (out.size() > 1 ? "," : "") + v.get_str();
            }
            return out + "}";
        };
        std::cout << "int(a) = " << show(ia) << '\n'
                  << "int(b) = " << show(ib) << '\n'
                  << "delta  = " << format_labeled(labeled_difference(ia, ib)) << '\n';
    }
    return kOk;
}

int cmd_witness(const std::string& oracle_spec, std::size_t n, OscConvention conv, const std::string& out_path) {
    std::unique_ptr<SubalgebraOracle> oracle;
    try {
        oracle = make_oracle(oracle_spec);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
    if (n == 0 || (conv == OscConvention::runs && n < 2)) {
        throw UsageError("--color must be >= 1 (>= 2 under the runs convention)");
    }
    WitnessTriple w;
    try {
        w = three_atom_witness(*oracle, n, conv);
    } catch (const std::exception& err) {
        std::cerr << "witness construction failed: " << err.what() << '\n';
        return kVerifyFailed;
    }
    const std::string line = to_json_line(w);
    if (out_path.empty()) {
        std::cout << line << '\n';
    } else if (!write_output(out_path, line + "\n")) {
        std::cerr << "cannot write " << out_path << '\n';
        return kUsage;
    }
    const VerifyResult v = verify_witness(w);
    std::cerr << "witness color " << w.color << " (" << to_string(conv) << ") from " << w.oracle << ": "
              << to_string(v.status) << ", " << w.queries << " split queries\n";
    return v ? kOk : kVerifyFailed;
}

int cmd_verify(const std::vector<std::string>& paths) {
    std::size_t total = 0;
    std::size_t passed = 0;
    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open " + path);
        }
        std::string line;
        for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
            if (line.empty()) {
                continue;
            }
            ++total;
            std::string verdict;
            try {
                const WitnessTriple w = witness_from_json(line);
                const VerifyResult v = verify_witness(w);
                if (v) {
                    ++passed;
                    verdict = "pass color " + std::to_string(w.color);
                } else {
                    verdict = "FAIL " + std::string(to_string(v.status)) + ": " + v.detail;
                }
            } catch (const std::exception& err) {
                verdict = std::string("FAIL unreadable: ") + err.what();
            }
            std::cout << path << ':' << lineno << ": " << verdict << '\n';
        }
    }
    std::cout << "verified " << passed << '/' << total << '\n';
    return passed == total ? kOk : kVerifyFailed;
}

int cmd_experiment(const ExperimentConfig& config, const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    const ExperimentReport report = run_experiment(config);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    std::cout << report.body();
    if (!out_path.empty() && !write_output(out_path, report.witness_file())) {
        std::cerr << "cannot write " << out_path << '\n';
        return kUsage;
    }
    // Timing goes to stderr so the report on stdout is reproducible byte for byte.
    std::cerr << "wall time " << elapsed.count() << " s\n";
    return report.verified_count() == report.cells.size() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval-algebra model of the countable atomless Boolean algebra: oscillation colorings and "
                 "3-atom witnesses"};
    app.require_subcommand(1);

    std::string convention_text = "changes";
    app.add_option("--osc-convention", convention_text, "Oscillation convention")
        ->check(CLI::IsMember({"changes", "runs"}))
        ->capture_default_str();
    app.fallthrough();

    std::string set_a, set_b;
    bool explain = false;
    auto* osc_cmd = app.add_subcommand("osc", "Print the oscillation of two good sets");
    osc_cmd->add_option("set-a", set_a, "Good set, e.g. \"[1/3,1/2)\"")->required();
    osc_cmd->add_option("set-b", set_b, "Good set")->required();
    osc_cmd->add_flag("--explain", explain, "Show interest sets and the labeled symmetric difference");

    std::string oracle_spec = "whole";
    std::size_t color = 1;
    std::string out_path;
    auto* witness_cmd = app.add_subcommand("witness", "Build and verify a 3-atom witness of a given color");
    witness_cmd->add_option("--oracle", oracle_spec, "whole | random:<u64>")->capture_default_str();
    witness_cmd->add_option("--color", color, "Target color")->required();
    witness_cmd->add_option("--out", out_path, "Write the witness JSON line here instead of stdout");

    std::vector<std::string> inputs;
    auto* verify_cmd = app.add_subcommand("verify", "Re-verify every line of witness files");
    verify_cmd->add_option("files", inputs, "Witness JSON-lines files")->required();

    ExperimentConfig config;
    auto* experiment_cmd = app.add_subcommand("experiment", "Witness grid over seeded random oracles");
    experiment_cmd->add_option("--trials", config.trials, "Number of random oracles")->capture_default_str();
    experiment_cmd->add_option("--colors", config.max_color, "Largest color")->capture_default_str();
    experiment_cmd->add_option("--seed", config.base_seed, "Base seed")->capture_default_str();
    experiment_cmd->add_option("--out", out_path, "Write all witness lines here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    const OscConvention conv = *parse_convention(convention_text);
    config.convention = conv;
    try {
        if (*osc_cmd) {
            return cmd_osc(set_a, set_b, conv, explain);
        }
        if (*witness_cmd) {
            return cmd_witness(oracle_spec, color, conv, out_path);
        }
        if (*verify_cmd) {
            return cmd_verify(inputs);
        }
        return cmd_experiment(config, out_path);
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsage;
    }
}
