#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mabsec/attacker.hpp"
#include "mabsec/attacks.hpp"
#include "mabsec/detector.hpp"
#include "mabsec/environment.hpp"
#include "mabsec/history.hpp"
#include "mabsec/learner.hpp"
#include "mabsec/trigger.hpp"

namespace mabsec {

struct Ucb1Spec {};
struct EpsGreedySpec {
    double exploration_c = 500.0;
};
struct TriggerLearnerSpec {
    TriggerVariant variant = TriggerVariant::ResetHistory;
    std::vector<double> anchors;  // empty: 1, 2, ..., N
};
using LearnerSpec = std::variant<Ucb1Spec, EpsGreedySpec, TriggerLearnerSpec>;

struct NoAttackSpec {};
struct BaselineSpec {
    double margin = 0.0;
    double confidence = 0.05;
};
struct StealthySpec {
    double eta = 0.05;
    // Unset: max(0, beta(1) - realized gap) against UCB1, 0 otherwise.
    std::optional<double> slack;
    double pin_margin = 1e-10;
};
struct TriggerAttackSpec {};
using AttackerSpec = std::variant<NoAttackSpec, BaselineSpec, StealthySpec, TriggerAttackSpec>;

std::string learner_name(const LearnerSpec& spec);
std::string attacker_name(const AttackerSpec& spec);

struct GameConfig {
    EnvironmentSpec env;
    LearnerSpec learner = Ucb1Spec{};
    AttackerSpec attacker = NoAttackSpec{};
    double delta = 0.05;
    long horizon = 0;
    std::uint64_t seed = 0;
    // Replaces round 1's pre-attack reward (the environment draw still happens).
    std::optional<double> first_reward_override;
    bool keep_history = false;

    DetectionConfig detection() const { return DetectionConfig{delta, env.sigma, env.num_arms}; }
    // Throws ConfigError.
    void validate() const;
};

struct GameOutcome {
    std::vector<long> pulls;  // N_i(T), slot i-1 for arm i
    long target_pulls = 0;
    // Target pulls in rounds up to and including the detection round.
    long pulls_before_detection = 0;
    double cost = 0.0;
    std::optional<long> fire_time;
    // Post-attack mean of arm 1 after round N minus mu_K.
    double realized_delta0_1k = 0.0;
    long attacked_rounds = 0;
    std::optional<History> history;

    long pulls_of(Arm arm) const { return pulls.at(arm.slot()); }
};

std::unique_ptr<Learner> make_learner(const GameConfig& cfg);
std::unique_ptr<Attacker> make_attacker(const GameConfig& cfg);

struct PlayOptions {
    long horizon = 0;
    std::uint64_t seed = 0;
    std::optional<double> first_reward_override;
    bool keep_history = false;
};

// One game. Each round: learner selects, environment samples, attacker
// manipulates, learner observes the post-attack reward, detector observes the
// pulled arm's post-attack mean. Environment noise and learner randomness come
// from separate streams of `seed`.
GameOutcome play(const EnvironmentSpec& env, Learner& learner, Attacker& attacker, const DetectionConfig& detection,
                 const PlayOptions& opts);

GameOutcome run_game(const GameConfig& cfg);

}  // namespace mabsec
