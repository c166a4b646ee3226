#include "mabsec/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mabsec/errors.hpp"

namespace mabsec {

void BaselineAttackerConfig::validate(int num_arms) const {
    check_arm(target, num_arms);
    if (!(margin >= 0.0)) throw ArgumentError("baseline margin must be >= 0");
    if (!(confidence > 0.0 && confidence < 1.0)) throw ArgumentError("baseline confidence must lie in (0, 1)");
}

double baseline_attack(const BaselineAttackerConfig& cfg, const DetectionConfig& radius, long, Arm arm,
                       double pre_reward, const History& history) {
    if (arm == cfg.target) return 0.0;
    const long n_target = history.count(cfg.target);
    if (n_target == 0) return 0.0;
    const long double threshold = static_cast<long double>(history.post_sum(cfg.target)) / n_target -
                                  2.0L * radius.radius(n_target, cfg.confidence) - cfg.margin;
    const long n_after = history.count(arm) + 1;
    // Post-sum after this round must not exceed n_after * threshold.
    const long double needed = history.post_sum(arm) + pre_reward - n_after * threshold;
    return std::max(0.0, static_cast<double>(needed));
}

BaselineAttacker::BaselineAttacker(BaselineAttackerConfig cfg, DetectionConfig radius)
    : cfg_(cfg), radius_(radius) {
    radius_.validate();
    cfg_.validate(radius_.num_arms);
}

void StealthyAttackerConfig::validate(int num_arms) const {
    check_arm(target, num_arms);
    if (!(eta > 0.0 && eta < 1.0)) throw ArgumentError("eta must lie in (0, 1)");
    if (slack && !(*slack >= 0.0)) throw ArgumentError("slack d must be >= 0");
    if (!(pin_margin >= 0.0)) throw ArgumentError("pin_margin must be >= 0");
}

StealthyAttacker::StealthyAttacker(StealthyAttackerConfig cfg, DetectionConfig det)
    : cfg_(cfg), det_(det), offsets_(det.num_arms) {
    det_.validate();
    cfg_.validate(det_.num_arms);
}

double StealthyAttacker::first_phase_threshold() const {
    return *first_reward_ - 2.0 * det_.radius(1, cfg_.eta) - 2.0 * det_.radius(1) - slack_;
}

double StealthyAttacker::pinned_mean(long n) const {
    const double r1 = *first_reward_;
    return r1 - det_.radius(1) - det_.radius(n) + cfg_.pin_margin * std::max(1.0, std::fabs(r1));
}

double StealthyAttacker::manipulate(long t, Arm arm, double pre_reward, const History& history) {
    if (t != last_t_ + 1) {
        throw ProtocolError("stealthy attacker: expected round " + std::to_string(last_t_ + 1) + ", got " +
                            std::to_string(t));
    }
    check_arm(arm, det_.num_arms);
    last_t_ = t;

    if (t == 1) {
        if (arm != Arm(1)) throw ProtocolError("stealthy attacker: round 1 must pull arm 1");
        first_reward_ = pre_reward;
        if (cfg_.slack) {
            slack_ = *cfg_.slack;
        } else if (cfg_.target_mean) {
            slack_ = std::max(0.0, det_.radius(1) - (pre_reward - *cfg_.target_mean));
        } else {
            slack_ = 0.0;
        }
        return 0.0;
    }
    if (arm == cfg_.target) return 0.0;

    auto& offset = offsets_[arm.slot()];
    if (t <= det_.num_arms) {
        if (arm == Arm(1)) return 0.0;
        if (!offset) offset = std::max(0.0, pre_reward - first_phase_threshold());
        return *offset;
    }
    if (arm != Arm(1)) {
        if (!offset) {
            throw ProtocolError("stealthy attacker: arm " + std::to_string(arm.id()) +
                                " was not pulled during rounds 1..N");
        }
        return *offset;
    }
    const long n = history.count(arm) + 1;
    const long double wanted_sum = static_cast<long double>(pinned_mean(n)) * n;
    const long double post = wanted_sum - history.post_sum(arm);
    return static_cast<double>(pre_reward - post);
}

}  // namespace mabsec
