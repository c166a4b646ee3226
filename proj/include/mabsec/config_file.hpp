#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "mabsec/experiment.hpp"

namespace mabsec {

struct ExperimentSpec {
    ExperimentGrid grid;
    int trials = 20;
    std::uint64_t master_seed = 1;
};

// Flat "key = value" document, '#' starts a comment. Lists are comma
// separated. One cell per delta_1k (or delta_1k_beta) entry; an explicit
// `means` list gives a single fixed-instance cell instead.
//
//   name, learner (ucb1|egreedy|trigger-reset|trigger-keep),
//   attacker (none|baseline|stealthy|trigger), num_arms, horizon, sigma,
//   delta, target_arm, exploration_c, anchors, eta, slack (auto|real),
//   pin_margin, baseline_margin, baseline_confidence, delta_1k,
//   delta_1k_beta, means, first_reward_beta, trials, master_seed
//
// Unknown or repeated keys and malformed values throw ConfigError.
ExperimentSpec parse_experiment_config(std::string_view text);
ExperimentSpec load_experiment_config(const std::filesystem::path& path);

// Shared value parsers, also used by the CLI.
LearnerSpec parse_learner(std::string_view name, double exploration_c, std::vector<double> anchors);
AttackerSpec parse_attacker(std::string_view name);
double parse_real(std::string_view text, std::string_view what);
std::vector<double> parse_real_list(std::string_view text, std::string_view what);

}  // namespace mabsec
