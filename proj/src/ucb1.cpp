#include "mabsec/ucb1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mabsec {

Ucb1::Ucb1(int num_arms, double sigma) : Ucb1(ArmTally(num_arms), sigma) {}

Ucb1::Ucb1(ArmTally prior, double sigma) : tally_(std::move(prior)), sigma_(sigma) {
    if (tally_.num_arms() < 1) throw ArgumentError("Ucb1: need at least one arm");
    if (!(sigma_ >= 0.0)) throw ArgumentError("Ucb1: sigma must be >= 0");
}

double Ucb1::index(Arm arm, long t) const {
    const long n = tally_.count(arm);
    if (n == 0) return std::numeric_limits<double>::infinity();
    return tally_.mean(arm) + 3.0 * sigma_ * std::sqrt(std::log(static_cast<double>(t)) / n);
}

Arm Ucb1::select(long t) const {
    const int n_arms = num_arms();
    if (t >= 1 && t <= n_arms) return Arm(static_cast<int>(t));
    // Only reachable with a carried-over table that misses an arm.
    for (int a = 1; a <= n_arms; ++a) {
        if (tally_.count(Arm(a)) == 0) return Arm(a);
    }
    Arm best(1);
    double best_index = index(best, t);
    for (int a = 2; a <= n_arms; ++a) {
        const double v = index(Arm(a), t);
        if (v > best_index) {
            best_index = v;
            best = Arm(a);
        }
    }
    return best;
}

void Ucb1::update(Arm arm, double post_reward) {
    check_arm(arm, num_arms());
    tally_.add(arm, post_reward);
}

EpsGreedy::EpsGreedy(int num_arms, double exploration_c) : tally_(num_arms), c_(exploration_c) {
    if (num_arms < 1) throw ArgumentError("EpsGreedy: need at least one arm");
    if (!(exploration_c >= 3.0)) throw ArgumentError("EpsGreedy: exploration constant C must be >= 3");
}

double EpsGreedy::epsilon(long t) const {
    return std::min(1.0, c_ * tally_.num_arms() / static_cast<double>(t));
}

Arm EpsGreedy::greedy_arm() const {
    Arm best(1);
    double best_mean = -std::numeric_limits<double>::infinity();
    for (int a = 1; a <= tally_.num_arms(); ++a) {
        const Arm arm(a);
        const double m = tally_.count(arm) == 0 ? std::numeric_limits<double>::infinity() : tally_.mean(arm);
        if (m > best_mean) {
            best_mean = m;
            best = arm;
        }
    }
    return best;
}

Arm EpsGreedy::select(long t, RngStream& rng) {
    const int n_arms = tally_.num_arms();
    if (t >= 1 && t <= n_arms) return Arm(static_cast<int>(t));
    if (rng.uniform01() < epsilon(t)) return Arm(rng.uniform_int(1, n_arms));
    return greedy_arm();
}

void EpsGreedy::update(Arm arm, double post_reward) {
    check_arm(arm, tally_.num_arms());
    tally_.add(arm, post_reward);
}

}  // namespace mabsec
