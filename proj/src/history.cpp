#include "mabsec/history.hpp"

#include <cmath>
#include <string>

#include "mabsec/errors.hpp"

namespace mabsec {

History::History(int num_arms) : num_arms_(num_arms), pre_(num_arms), post_(num_arms) {
    if (num_arms < 1) throw ArgumentError("History needs at least one arm");
}

const RoundRecord& History::record_round(long t, Arm arm, double pre_reward, double manipulation) {
    if (t != size() + 1) {
        throw ProtocolError("record_round: expected round " + std::to_string(size() + 1) + ", got " +
                            std::to_string(t));
    }
    check_arm(arm, num_arms_);
    RoundRecord rec{t, arm, pre_reward, manipulation, pre_reward - manipulation};
    pre_.add(arm, rec.pre_reward);
    post_.add(arm, rec.post_reward);
    cost_ += std::fabs(static_cast<long double>(manipulation));
    rounds_.push_back(rec);
    return rounds_.back();
}

std::optional<EmpiricalMeans> History::empirical_means(Arm arm) const {
    check_arm(arm, num_arms_);
    if (post_.count(arm) == 0) return std::nullopt;
    return EmpiricalMeans{pre_.mean(arm), post_.mean(arm), post_.count(arm)};
}

}  // namespace mabsec
