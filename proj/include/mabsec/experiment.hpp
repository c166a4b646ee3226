#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mabsec/game.hpp"

namespace mabsec {

// One grid point. When generate_instance is set the environment means come
// from make_instance(delta_1k) seeded by (master_seed, instance_id), so cells
// sharing an instance_id play the same bandit.
struct ExperimentCell {
    std::string label;
    GameConfig game;  // game.seed is ignored
    double delta_1k = 0.0;
    bool generate_instance = true;
    std::uint64_t instance_id = 0;
    // Round-1 reward override mu_K + f * beta(1).
    std::optional<double> first_reward_beta;
};

struct ExperimentGrid {
    std::string name;
    std::vector<ExperimentCell> cells;
};

struct TrialRow {
    std::size_t cell_id = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double delta_1k = 0.0;
    double realized_delta0_1k = 0.0;
    long target_pulls = 0;
    long pulls_before_detection = 0;
    double cost = 0.0;
    std::optional<long> fire_time;
    std::string learner;
    std::string attacker;
};

struct Moments {
    double mean = 0.0;
    double std = 0.0;  // sample std, 0 for one value
};

Moments moments(const std::vector<double>& xs);

// mean/std are over pulls_before_detection.
struct CellSummary {
    std::size_t cell_id = 0;
    std::string label;
    double delta_1k = 0.0;
    std::string learner;
    std::string attacker;
    int trials = 0;
    double mean = 0.0;
    double std = 0.0;
    double detection_rate = 0.0;
    Moments target_pulls;
    Moments cost;
    std::optional<double> median_fire_time;  // over fired trials
};

struct ExperimentReport {
    std::string name;
    int trials = 0;
    std::uint64_t master_seed = 0;
    std::vector<ExperimentCell> cells;  // resolved: instance means filled in
    std::vector<TrialRow> rows;         // ordered by (cell, trial)
    std::vector<CellSummary> summaries;
};

// Environment and override for a cell, with means generated when requested.
GameConfig resolve_cell(const ExperimentCell& cell, std::uint64_t master_seed);

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t cell_id, int trial);

TrialRow make_row(std::size_t cell_id, int trial, std::uint64_t seed, const ExperimentCell& cell, const GameConfig& game,
                  const GameOutcome& outcome);

std::vector<CellSummary> summarize(const std::vector<ExperimentCell>& cells, const std::vector<TrialRow>& rows);

// threads = 0 uses the hardware concurrency. Output does not depend on it.
ExperimentReport run_experiment(const ExperimentGrid& grid, int trials, std::uint64_t master_seed,
                                unsigned threads = 0);

}  // namespace mabsec
