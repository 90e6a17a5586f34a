#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "atomless/witness.hpp"

namespace atomless {

struct ExperimentConfig {
    std::size_t trials = 50;
    std::size_t max_color = 10;
    std::uint64_t base_seed = 0;
    OscConvention convention = OscConvention::changes;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

struct ExperimentCell {
    std::size_t trial = 0;
    std::size_t color = 0;
    bool verified = false;
    std::string failure;  // empty when verified
    std::size_t queries = 0;
    std::string witness_line;  // empty when construction threw
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<std::uint64_t> seeds;  // per trial
    std::vector<ExperimentCell> cells;  // ordered by (trial, color)

    std::size_t verified_count() const;
    /// Deterministic text body: header, one row per oracle, summary line.
    std::string body() const;
    /// All witness lines, newline-terminated, in cell order.
    std::string witness_file() const;
};

/// Seed of the random oracle used for trial t.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial);

/// For every trial t and color n in the grid, builds a fresh
/// random:<trial_seed> oracle, runs three_atom_witness and verify_witness.
/// Under the runs convention colors start at 2.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace atomless
