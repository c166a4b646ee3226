#pragma once

#include <optional>
#include <vector>

#include "mabsec/arm.hpp"

namespace mabsec {

struct RoundRecord {
    long t = 0;
    Arm arm{1};
    double pre_reward = 0.0;
    double manipulation = 0.0;
    double post_reward = 0.0;  // pre_reward - manipulation
};

// Running per-arm count and reward sum. Sums are kept in long double; means
// are the long double quotient rounded once to double.
class ArmTally {
public:
    explicit ArmTally(int num_arms = 0) : counts_(num_arms, 0), sums_(num_arms, 0.0L) {}

    void add(Arm arm, double reward) {
        ++counts_[arm.slot()];
        sums_[arm.slot()] += reward;
    }

    int num_arms() const { return static_cast<int>(counts_.size()); }
    long count(Arm arm) const { return counts_[arm.slot()]; }
    long double sum(Arm arm) const { return sums_[arm.slot()]; }
    double mean(Arm arm) const {
        return static_cast<double>(sums_[arm.slot()] / static_cast<long double>(counts_[arm.slot()]));
    }

private:
    std::vector<long> counts_;
    std::vector<long double> sums_;
};

struct EmpiricalMeans {
    double pre_mean = 0.0;
    double post_mean = 0.0;
    long count = 0;
};

// Full round-by-round record of one game.
class History {
public:
    explicit History(int num_arms);

    // Appends round t; t must equal size() + 1.
    const RoundRecord& record_round(long t, Arm arm, double pre_reward, double manipulation);

    // nullopt when the arm has never been pulled.
    std::optional<EmpiricalMeans> empirical_means(Arm arm) const;

    int num_arms() const { return num_arms_; }
    long size() const { return static_cast<long>(rounds_.size()); }
    bool empty() const { return rounds_.empty(); }
    const std::vector<RoundRecord>& rounds() const { return rounds_; }
    const RoundRecord& round(long t) const { return rounds_.at(static_cast<std::size_t>(t - 1)); }

    long count(Arm arm) const { return post_.count(arm); }
    long double pre_sum(Arm arm) const { return pre_.sum(arm); }
    long double post_sum(Arm arm) const { return post_.sum(arm); }
    double cumulative_cost() const { return static_cast<double>(cost_); }

private:
    int num_arms_;
    std::vector<RoundRecord> rounds_;
    ArmTally pre_;
    ArmTally post_;
    long double cost_ = 0.0L;
};

}  // namespace mabsec
