#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mabsec/arm.hpp"
#include "mabsec/attacker.hpp"
#include "mabsec/history.hpp"
#include "mabsec/learner.hpp"

namespace testsupport {

// Closed form written out again, in long double, without the library.
inline double beta_ref(long n, double conf, double sigma, int num_arms) {
    const long double pi = 3.14159265358979323846264338327950288L;
    const long double nn = static_cast<long double>(n);
    const long double arg = pi * pi * num_arms * nn * nn / (3.0L * conf);
    return static_cast<double>(std::sqrt(2.0L * sigma * sigma / nn * std::log(arg)));
}

// Small hand-rolled generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    double normal(double mean, double sd) { return std::normal_distribution<double>(mean, sd)(eng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(eng_); }
    // Multiples of 1/64 in [-8, 8]: sums and differences stay exact.
    double dyadic() { return integer(-512, 512) / 64.0; }

private:
    std::mt19937_64 eng_;
};

// Random history: arms biased toward a few favourites, rewards around per-arm
// centres, occasional manipulations.
inline mabsec::History random_history(Gen& g, int num_arms, long rounds, double spread, double attack_rate) {
    mabsec::History h(num_arms);
    std::vector<double> centre(static_cast<std::size_t>(num_arms));
    for (auto& c : centre) c = g.real(-1.0, 1.0);
    for (long t = 1; t <= rounds; ++t) {
        const int a = g.chance(0.5) ? g.integer(1, std::min(2, num_arms)) : g.integer(1, num_arms);
        const double pre = g.normal(centre[static_cast<std::size_t>(a - 1)], spread);
        const double alpha = g.chance(attack_rate) ? g.real(-1.0, 1.0) : 0.0;
        h.record_round(t, mabsec::Arm(a), pre, alpha);
    }
    return h;
}

// Learner that replays a fixed arm list and records what it observed.
class ScriptedLearner : public mabsec::Learner {
public:
    explicit ScriptedLearner(std::vector<int> arms) : arms_(std::move(arms)) {}

    mabsec::Arm select(long t, mabsec::RngStream&) override {
        selected_at.push_back(t);
        return mabsec::Arm(arms_.at(static_cast<std::size_t>(t - 1) % arms_.size()));
    }
    void observe(long t, mabsec::Arm arm, double post_reward) override {
        observed_at.push_back(t);
        observed_arm.push_back(arm.id());
        observed.push_back(post_reward);
    }
    std::string name() const override { return "scripted"; }

    std::vector<long> selected_at;
    std::vector<long> observed_at;
    std::vector<int> observed_arm;
    std::vector<double> observed;

private:
    std::vector<int> arms_;
};

// Attacker that subtracts a fixed amount and records what it was shown.
class SpyAttacker : public mabsec::Attacker {
public:
    explicit SpyAttacker(double alpha) : alpha_(alpha) {}

    double manipulate(long t, mabsec::Arm, double pre_reward, const mabsec::History& history) override {
        called_at.push_back(t);
        history_size.push_back(history.size());
        pre.push_back(pre_reward);
        return alpha_;
    }
    std::string name() const override { return "spy"; }

    std::vector<long> called_at;
    std::vector<long> history_size;
    std::vector<double> pre;

private:
    double alpha_;
};

}  // namespace testsupport
