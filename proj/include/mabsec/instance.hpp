#pragma once

#include <cstdint>

#include "mabsec/environment.hpp"

namespace mabsec {

// Sweep instance: mu_K = 0, mu_1 = delta_1k, every other mean drawn from
// N(0, 1) and redrawn while it exceeds mu_1. Target K must not be arm 1.
EnvironmentSpec make_instance(int num_arms, double sigma, Arm target, double delta_1k, RngStream& rng);

// Same, with the draws taken from the instance stream of `seed`.
EnvironmentSpec make_instance(int num_arms, double sigma, Arm target, double delta_1k, std::uint64_t seed);

}  // namespace mabsec
