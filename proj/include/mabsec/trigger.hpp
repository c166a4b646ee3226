#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mabsec/attacker.hpp"
#include "mabsec/learner.hpp"
#include "mabsec/ucb1.hpp"

namespace mabsec {

// Special times {1, 2, 4, 8, ...}. Throws ArgumentError for t < 1.
bool in_special_times(long t);
// |{s in special times : s <= t}|.
long special_times_upto(long t);

// Reward anchors and arm pattern that steer the trigger learner. Anchor k is
// the round-1 reward that starts tracking arm k; later special rounds expect
// anchor_k + alpha / j^2 where j is the position in the binary tree of paths.
struct TriggerSchedule {
    int num_arms = 0;
    double sigma = 0.0;
    std::vector<double> anchors;  // pairwise distinct, one per arm
    double alpha = 0.0;           // (1/pi^2) sqrt(72 sigma^2 ln(pi^2 N / 3))

    // Anchors default to 1, 2, ..., N.
    static TriggerSchedule make(int num_arms, double sigma, std::vector<double> anchors = {});

    double anchor(Arm k) const { return anchors.at(k.slot()); }
    void validate() const;
};

// Reward values are snapped to multiples of 2^-kGridBits. An off-grid target
// can be unreachable as pre - alpha when every candidate is a rounding tie;
// ties round to even mantissas, and grid values are even.
inline constexpr int kGridBits = 40;
double snap_to_grid(double x);

double c_value(const TriggerSchedule& sched, Arm k, long t, long j);
// Arm prescribed at round t on tree position j while tracking k.
Arm b_value(Arm k, long t, long j, int num_arms);
// Second arm of the coin-flip special action: k - 1, or N when k = 1.
Arm alternate_arm(Arm k, int num_arms);

enum class TriggerVariant {
    ResetHistory,  // fallback UCB1 forgets everything seen so far
    KeepHistory,   // fallback UCB1 starts from every reward observed so far
};

// Learner that follows the special actions of the tracked arm for as long as
// the observed rewards keep matching the anchors at special times, and runs
// UCB1 otherwise.
class TriggerLearner : public Learner {
public:
    struct Tracking {
        Arm k;
        long j;
    };

    TriggerLearner(TriggerSchedule sched, TriggerVariant variant);

    Arm select(long t, RngStream& rng) override;
    void observe(long t, Arm arm, double post_reward) override;
    std::string name() const override;

    std::optional<Tracking> tracking() const;
    bool in_fallback() const { return fallback_ != nullptr; }
    // Round after which the fallback UCB1 took over.
    std::optional<long> fallback_since() const { return fallback_since_; }
    TriggerVariant variant() const { return variant_; }
    const Ucb1* fallback() const { return fallback_.get(); }

private:
    void enter_fallback(long t);

    TriggerSchedule sched_;
    TriggerVariant variant_;
    std::optional<Arm> k_;
    long j_ = 1;
    ArmTally seen_;
    std::unique_ptr<Ucb1> fallback_;
    std::optional<long> fallback_since_;
    long last_t_ = 0;
    std::optional<Arm> pending_;
};

// Keeps the learner on the target's trigger path: rewrites the reward at
// every special time to the expected anchor value and never touches other
// rounds. Infers the tree position from the arms the learner pulls.
class TriggerAttacker : public Attacker {
public:
    TriggerAttacker(TriggerSchedule sched, Arm target);

    double manipulate(long t, Arm arm, double pre_reward, const History& history) override;
    std::string name() const override { return "trigger"; }

    bool active() const { return active_; }
    long structure_index() const { return j_; }

private:
    TriggerSchedule sched_;
    Arm target_;
    long j_ = 1;
    bool active_ = true;
    long last_t_ = 0;
};

// alpha such that pre_reward - alpha == wanted bit-for-bit, when one exists
// within a few ulps of pre_reward - wanted; otherwise pre_reward - wanted.
// Exact for grid values of `wanted` whenever |pre_reward - wanted| is not in a
// higher binade than |wanted|.
double exact_rewrite(double pre_reward, double wanted);

}  // namespace mabsec
