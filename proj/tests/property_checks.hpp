#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace checks {

struct Result {
    std::string name;
    bool ok = true;
    long cases = 0;
    std::string detail;  // first failure
};

Result beta_monotone();
Result beta_growth();
Result detector_matches_oracle(int histories = 200, std::uint64_t seed = 1);
Result detector_shift_invariance(int histories = 200, std::uint64_t seed = 2);
Result single_pull_never_fires(std::uint64_t seed = 3);
Result history_sums_exact(std::uint64_t seed = 4);
Result zero_noise_means_exact();
Result stealthy_pin(int games = 20, std::uint64_t seed = 5);
Result stealthy_arm_rules(int games = 20, std::uint64_t seed = 6);
Result stealthy_shift_verdicts(int games = 20, std::uint64_t seed = 7);
Result protocol_ordering(std::uint64_t seed = 8);
Result stream_separation(std::uint64_t seed = 9);

std::vector<Result> all();

}  // namespace checks
