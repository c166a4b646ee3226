#pragma once

#include <optional>
#include <vector>

#include "mabsec/attacker.hpp"
#include "mabsec/detector.hpp"

namespace mabsec {

// Mean-dragging attack: every pull of a non-target arm is pushed down until
// its post-attack mean sits 2 beta(N_K, confidence) + margin below the
// target's current mean.
struct BaselineAttackerConfig {
    Arm target{1};
    double margin = 0.0;       // Delta_0 >= 0
    double confidence = 0.05;  // delta_a

    void validate(int num_arms) const;
};

// `radius` supplies sigma and N for beta; its delta is not used.
double baseline_attack(const BaselineAttackerConfig& cfg, const DetectionConfig& radius, long t, Arm arm,
                       double pre_reward, const History& history);

class BaselineAttacker : public Attacker {
public:
    BaselineAttacker(BaselineAttackerConfig cfg, DetectionConfig radius);

    double manipulate(long t, Arm arm, double pre_reward, const History& history) override {
        return baseline_attack(cfg_, radius_, t, arm, pre_reward, history);
    }
    std::string name() const override { return "baseline"; }

private:
    BaselineAttackerConfig cfg_;
    DetectionConfig radius_;
};

struct StealthyAttackerConfig {
    Arm target{2};
    double eta = 0.05;
    // Slack d. When unset it is derived at round 1 as
    // max(0, beta(1) - (first_reward - target_mean)), or 0 without target_mean.
    std::optional<double> slack;
    std::optional<double> target_mean;
    // Arm 1's pinned mean is raised by pin_margin * max(1, |first_reward|) so
    // its interval overlaps the first-round interval by a hair instead of
    // touching it.
    double pin_margin = 1e-10;

    void validate(int num_arms) const;
};

// Two-phase attack. Rounds 2..N: each arm outside {1, K} is shifted down once,
// by the least amount that puts it 2 beta(1, eta) + 2 beta(1) + d below arm
// 1's first reward, and that offset is frozen. Later rounds repeat the frozen
// offsets and pin arm 1's post-attack mean to
// first_reward - beta(1) - beta(N_1(t)). Arm K is never touched.
class StealthyAttacker : public Attacker {
public:
    enum class Phase { FirstN, Steady };

    StealthyAttacker(StealthyAttackerConfig cfg, DetectionConfig det);

    double manipulate(long t, Arm arm, double pre_reward, const History& history) override;
    std::string name() const override { return "stealthy"; }

    Phase phase() const { return last_t_ <= det_.num_arms ? Phase::FirstN : Phase::Steady; }
    std::optional<double> first_reward() const { return first_reward_; }
    double slack() const { return slack_; }
    std::optional<double> offset(Arm arm) const { return offsets_.at(arm.slot()); }
    // Post-attack mean the attack holds arm 1 at after its n-th pull (n >= 2).
    double pinned_mean(long n) const;
    // First-phase depression threshold r1 - 2 beta(1, eta) - 2 beta(1) - d.
    double first_phase_threshold() const;

private:
    StealthyAttackerConfig cfg_;
    DetectionConfig det_;
    std::optional<double> first_reward_;
    double slack_ = 0.0;
    std::vector<std::optional<double>> offsets_;
    long last_t_ = 0;
};

}  // namespace mabsec
