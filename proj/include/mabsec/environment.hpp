#pragma once

#include <vector>

#include "mabsec/arm.hpp"
#include "mabsec/rng.hpp"

namespace mabsec {

// Gaussian bandit instance: arm i pays N(means[i], sigma^2).
struct EnvironmentSpec {
    int num_arms = 0;
    double sigma = 0.0;
    std::vector<double> means;
    Arm target{1};

    double mean(Arm arm) const { return means.at(arm.slot()); }

    // Throws ArgumentError unless N >= 2, |means| = N, sigma >= 0, target in range.
    void validate() const;
};

double sample_reward(const EnvironmentSpec& env, Arm arm, RngStream& rng);

}  // namespace mabsec
