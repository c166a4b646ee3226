#pragma once

#include "mabsec/history.hpp"
#include "mabsec/learner.hpp"

namespace mabsec {

// UCB1 with index mean + 3 sigma sqrt(ln t / n). Rounds t <= N pull arm t;
// argmax ties go to the lowest arm index.
class Ucb1 : public Learner {
public:
    Ucb1(int num_arms, double sigma);
    // Starts from already-observed statistics instead of an empty table.
    Ucb1(ArmTally prior, double sigma);

    Arm select(long t) const;
    void update(Arm arm, double post_reward);

    // Index for an arm with at least one observation.
    double index(Arm arm, long t) const;

    Arm select(long t, RngStream&) override { return select(t); }
    void observe(long, Arm arm, double post_reward) override { update(arm, post_reward); }
    std::string name() const override { return "ucb1"; }

    const ArmTally& tally() const { return tally_; }
    int num_arms() const { return tally_.num_arms(); }
    double sigma() const { return sigma_; }

private:
    ArmTally tally_;
    double sigma_;
};

// epsilon-greedy with epsilon_t = min{1, C N / t}, C >= 3. Rounds t <= N pull
// arm t; exploration draws uniformly over all N arms (the greedy arm included).
class EpsGreedy : public Learner {
public:
    EpsGreedy(int num_arms, double exploration_c);

    Arm select(long t, RngStream& rng) override;
    void update(Arm arm, double post_reward);
    void observe(long, Arm arm, double post_reward) override { update(arm, post_reward); }
    std::string name() const override { return "egreedy"; }

    double epsilon(long t) const;
    // argmax of post-attack means, lowest index on ties.
    Arm greedy_arm() const;

    const ArmTally& tally() const { return tally_; }
    double exploration_c() const { return c_; }

private:
    ArmTally tally_;
    double c_;
};

}  // namespace mabsec
