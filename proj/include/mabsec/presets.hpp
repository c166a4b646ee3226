#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mabsec/experiment.hpp"

namespace mabsec {

struct PresetOptions {
    int trials = 20;
    std::uint64_t master_seed = 2024;
};

// One experiment per panel: "<preset>-n10" runs (N, T) = (10, 10^4) and
// "<preset>-n30" runs (30, 2*10^4).
struct PanelExperiment {
    std::string name;
    ExperimentGrid grid;
    int trials = 20;
    std::uint64_t master_seed = 0;
};

//   fig1 / fig3  detection probability, baseline vs UCB1 / eps-greedy,
//                Delta_1K = beta(1) / 2^(4-i), i = 0..9
//   fig2 / fig4  pulls before detection, baseline vs stealthy,
//                Delta_1K in {beta(1)/2, beta(1), 2 beta(1)}
//   fig5 / fig6  same, round-1 reward pinned to mu_K + (1 -+ 0.2) beta(1)
//   fig7 / fig8  detection times, baseline, Delta_1K in {beta(1)/2, beta(1), 2 beta(1)}
//   appendix-c   fig3..fig8
//   all          fig1..fig8
// UCB1 for odd figures up to fig5 and fig7; eps-greedy with C = 500 otherwise.
std::vector<PanelExperiment> make_preset(std::string_view name, const PresetOptions& opts = {});

std::vector<std::string> preset_names();

// Delta_1K = beta(1) / 2^(4-i) for i = 0..9.
std::vector<double> detection_grid(int num_arms, double sigma, double delta);

}  // namespace mabsec
