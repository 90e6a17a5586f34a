#include "atomless/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "atomless/rng.hpp"
#include "atomless/witness_io.hpp"

namespace atomless {

namespace {

std::size_t first_color(OscConvention conv) { return conv == OscConvention::runs ? 2 : 1; }

ExperimentCell run_cell(std::uint64_t seed, std::size_t trial, std::size_t color, OscConvention conv) {
    ExperimentCell cell;
    cell.trial = trial;
    cell.color = color;
    RandomSplitOracle oracle(seed);
    try {
        const WitnessTriple w = three_atom_witness(oracle, color, conv);
        // Verify what a consumer would read back, not the in-memory object.
        cell.witness_line = to_json_line(w);
        const VerifyResult v = verify_witness(witness_from_json(cell.witness_line));
        cell.verified = static_cast<bool>(v);
        if (!cell.verified) {
            cell.failure = std::string(to_string(v.status)) + ": " + v.detail;
        }
    } catch (const std::exception& err) {
        cell.failure = err.what();
    }
    cell.queries = oracle.query_count();
    return cell;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) {
    return splitmix64(base_seed + trial);
}

std::size_t ExperimentReport::verified_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const ExperimentCell& c) { return c.verified; }));
}

std::string ExperimentReport::body() const {
    const std::size_t lo = first_color(config.convention);
    std::ostringstream os;
    os << "experiment: " << config.trials << " random oracles, colors " << lo << ".." << config.max_color
       << ", convention " << to_string(config.convention) << ", base seed " << config.base_seed << '\n';
    os << "cells show status/split queries\n";
    os << "trial  oracle                      ";
    for (std::size_t n = lo; n <= config.max_color; ++n) {
        os << " n=" << n << std::string(n < 10 ? 6 : 5, ' ');
    }
    os << '\n';
    std::size_t idx = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
        std::string spec = "random:" + std::to_string(seeds[t]);
        spec.resize(std::max<std::size_t>(spec.size(), 28), ' ');
        std::string trial = std::to_string(t);
        trial.resize(std::max<std::size_t>(trial.size(), 6), ' ');
        os << trial << ' ' << spec;
        for (std::size_t n = lo; n <= config.max_color; ++n, ++idx) {
            const auto& c = cells[idx];
            std::string text = (c.verified ? "ok/" : "FAIL/") + std::to_string(c.queries);
            text.resize(std::max<std::size_t>(text.size(), 9), ' ');
            os << ' ' << text;
        }
        os << '\n';
    }
    for (const auto& c : cells) {
        if (!c.verified) {
            os << "failure trial " << c.trial << " n=" << c.color << ": " << c.failure << '\n';
        }
    }
    os << "verified " << verified_count() << '/' << cells.size() << '\n';
    return os.str();
}

std::string ExperimentReport::witness_file() const {
    std::string out;
    for (const auto& c : cells) {
        if (!c.witness_line.empty()) {
            out += c.witness_line;
            out += '\n';
        }
    }
    return out;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    ExperimentReport report;
    report.config = config;
    const std::size_t lo = first_color(config.convention);
    const std::size_t per_trial = config.max_color >= lo ? config.max_color - lo + 1 : 0;

    for (std::size_t t = 0; t < config.trials; ++t) {
        report.seeds.push_back(trial_seed(config.base_seed, t));
    }
    report.cells.resize(config.trials * per_trial);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < report.cells.size(); i = next++) {
            const std::size_t t = i / per_trial;
            const std::size_t n = lo + i % per_trial;
            report.cells[i] = run_cell(report.seeds[t], t, n, config.convention);
        }
    };
    unsigned workers = config.workers != 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, report.cells.size())));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    return report;
}

}  // namespace atomless
