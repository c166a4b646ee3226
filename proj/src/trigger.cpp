#include "mabsec/trigger.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mabsec/errors.hpp"

namespace mabsec {

bool in_special_times(long t) {
    if (t < 1) throw ArgumentError("special times are defined for t >= 1");
    return std::has_single_bit(static_cast<unsigned long>(t));
}

long special_times_upto(long t) {
    if (t < 1) return 0;
    return std::bit_width(static_cast<unsigned long>(t));
}

TriggerSchedule TriggerSchedule::make(int num_arms, double sigma, std::vector<double> anchors) {
    TriggerSchedule s;
    s.num_arms = num_arms;
    s.sigma = sigma;
    if (anchors.empty()) {
        for (int k = 1; k <= num_arms; ++k) anchors.push_back(static_cast<double>(k));
    }
    s.anchors = std::move(anchors);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    s.alpha = std::sqrt(72.0 * sigma * sigma * std::log(pi2 * num_arms / 3.0)) / pi2;
    s.validate();
    return s;
}

void TriggerSchedule::validate() const {
    if (num_arms < 2) throw ArgumentError("trigger schedule needs N >= 2");
    if (!(sigma >= 0.0)) throw ArgumentError("trigger schedule: sigma must be >= 0");
    if (static_cast<int>(anchors.size()) != num_arms) throw ArgumentError("trigger schedule: need one anchor per arm");
    for (std::size_t a = 0; a < anchors.size(); ++a) {
        if (!std::isfinite(anchors[a])) throw ArgumentError("trigger schedule: anchors must be finite");
        for (std::size_t b = a + 1; b < anchors.size(); ++b) {
            if (snap_to_grid(anchors[a]) == snap_to_grid(anchors[b])) {
                throw ArgumentError("trigger schedule: anchors must be pairwise distinct on the reward grid");
            }
        }
    }
}

double snap_to_grid(double x) { return std::ldexp(std::nearbyint(std::ldexp(x, kGridBits)), -kGridBits); }

double c_value(const TriggerSchedule& sched, Arm k, long t, long j) {
    check_arm(k, sched.num_arms);
    if (t < 1 || j < 1) throw ArgumentError("c_value: t and j must be >= 1");
    if (t == 1) return snap_to_grid(sched.anchor(k));
    const double jd = static_cast<double>(j);
    return snap_to_grid(sched.anchor(k) + sched.alpha / (jd * jd));
}

Arm alternate_arm(Arm k, int num_arms) { return k.id() == 1 ? Arm(num_arms) : Arm(k.id() - 1); }

Arm b_value(Arm k, long t, long j, int num_arms) {
    check_arm(k, num_arms);
    if (t < 1 || j < 1) throw ArgumentError("b_value: t and j must be >= 1");
    if (t == 1) return Arm(1);
    if (in_special_times(t - 1)) return j % 2 == 1 ? k : alternate_arm(k, num_arms);
    return k;
}

double exact_rewrite(double pre_reward, double wanted) {
    const double base = pre_reward - wanted;
    if (pre_reward - base == wanted) return base;
    double up = base;
    double down = base;
    for (int step = 0; step < 64; ++step) {
        up = std::nextafter(up, std::numeric_limits<double>::infinity());
        if (pre_reward - up == wanted) return up;
        down = std::nextafter(down, -std::numeric_limits<double>::infinity());
        if (pre_reward - down == wanted) return down;
    }
    return base;
}

TriggerLearner::TriggerLearner(TriggerSchedule sched, TriggerVariant variant)
    : sched_(std::move(sched)), variant_(variant), seen_(sched_.num_arms) {
    sched_.validate();
}

std::string TriggerLearner::name() const {
    return variant_ == TriggerVariant::ResetHistory ? "trigger-reset" : "trigger-keep";
}

std::optional<TriggerLearner::Tracking> TriggerLearner::tracking() const {
    if (!k_) return std::nullopt;
    return Tracking{*k_, j_};
}

Arm TriggerLearner::select(long t, RngStream& rng) {
    if (pending_) throw ProtocolError("trigger learner: select called twice without observe");
    if (t != last_t_ + 1) {
        throw ProtocolError("trigger learner: expected round " + std::to_string(last_t_ + 1) + ", got " +
                            std::to_string(t));
    }
    Arm arm(1);
    if (t == 1) {
        arm = Arm(1);
    } else if (k_) {
        if (in_special_times(t - 1)) {
            if (rng.coin()) {
                arm = *k_;
                j_ = 2 * j_ - 1;
            } else {
                arm = alternate_arm(*k_, sched_.num_arms);
                j_ = 2 * j_;
            }
        } else {
            arm = *k_;
        }
    } else {
        const long clock = variant_ == TriggerVariant::ResetHistory ? t - *fallback_since_ : t;
        arm = fallback_->select(clock);
    }
    pending_ = arm;
    return arm;
}

void TriggerLearner::observe(long t, Arm arm, double post_reward) {
    if (!pending_ || t != last_t_ + 1) throw ProtocolError("trigger learner: observe without matching select");
    if (arm != *pending_) throw ProtocolError("trigger learner: observed arm differs from the selected arm");
    pending_.reset();
    last_t_ = t;
    seen_.add(arm, post_reward);

    if (t == 1) {
        for (int k = 1; k <= sched_.num_arms; ++k) {
            if (post_reward == c_value(sched_, Arm(k), 1, 1)) {
                k_ = Arm(k);
                j_ = 1;
                return;
            }
        }
        enter_fallback(t);
        return;
    }
    if (k_) {
        if (in_special_times(t) && post_reward != c_value(sched_, *k_, t, j_)) enter_fallback(t);
        return;
    }
    fallback_->update(arm, post_reward);
}

void TriggerLearner::enter_fallback(long t) {
    k_.reset();
    fallback_since_ = t;
    if (variant_ == TriggerVariant::ResetHistory) {
        fallback_ = std::make_unique<Ucb1>(sched_.num_arms, sched_.sigma);
    } else {
        fallback_ = std::make_unique<Ucb1>(seen_, sched_.sigma);
    }
}

TriggerAttacker::TriggerAttacker(TriggerSchedule sched, Arm target) : sched_(std::move(sched)), target_(target) {
    sched_.validate();
    check_arm(target_, sched_.num_arms);
}

double TriggerAttacker::manipulate(long t, Arm arm, double pre_reward, const History&) {
    if (t != last_t_ + 1) {
        throw ProtocolError("trigger attacker: expected round " + std::to_string(last_t_ + 1) + ", got " +
                            std::to_string(t));
    }
    last_t_ = t;
    if (t == 1) {
        active_ = arm == Arm(1);
        j_ = 1;
    } else if (active_) {
        if (in_special_times(t - 1)) {
            if (arm == target_) {
                j_ = 2 * j_ - 1;
            } else if (arm == alternate_arm(target_, sched_.num_arms)) {
                j_ = 2 * j_;
            } else {
                active_ = false;
            }
        } else if (arm != target_) {
            active_ = false;
        }
    }
    if (!active_ || !in_special_times(t)) return 0.0;
    return exact_rewrite(pre_reward, c_value(sched_, target_, t, j_));
}

}  // namespace mabsec
