// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "mabsec/confidence.hpp"
#include "mabsec/experiment.hpp"
#include "mabsec/game.hpp"
#include "mabsec/instance.hpp"
#include "mabsec/presets.hpp"
#include "mabsec/rng.hpp"
#include "property_checks.hpp"

using namespace mabsec;

namespace {

constexpr int kN = 10;
constexpr double kSigma = 0.1;
constexpr double kDelta = 0.05;
constexpr double kEta = 0.05;
constexpr long kT = 10000;
constexpr std::uint64_t kMaster = 20240611;

// Pinned tolerances.
constexpr double kTypeOneRate = 0.05 + 0.021;
constexpr double kDetectRate = 0.9;
constexpr double kStealthDetectRate = 0.05 + 0.03;
constexpr double kBoundShare = 0.9;
constexpr double kTargetFraction = 0.8;
constexpr double kTargetShare = 0.85;
constexpr double kFailureCap = 0.2;
constexpr double kEgreedyC = 3.0;
constexpr long kTriggerFloor = 9985;
constexpr long kTriggerAttacks = 14;
constexpr double kTriggerRegretRatio = 2.0;
constexpr double kPropertySeconds = 10.0;

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, bool ok, const std::string& what, double secs) {
    std::printf("criterion %d %s  %s  (%.1fs)\n", id, ok ? "PASS" : "FAIL", what.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double b1() { return beta(1, kDelta, kSigma, kN); }

EnvironmentSpec instance(std::uint64_t id, double delta_1k) {
    return make_instance(kN, kSigma, Arm(kN), delta_1k, derive_seed(kMaster, 0xacce'0000ULL | id, 0));
}

GameConfig stealthy_game(int trial, double first_beta, LearnerSpec learner, std::optional<double> slack) {
    GameConfig g;
    g.env = instance(static_cast<std::uint64_t>(trial), b1());
    g.learner = learner;
    g.attacker = StealthySpec{kEta, slack, 1e-10};
    g.delta = kDelta;
    g.horizon = kT;
    g.seed = derive_seed(kMaster, 4, static_cast<std::uint64_t>(trial));
    g.first_reward_override = g.env.mean(g.env.target) + first_beta * b1();
    return g;
}

void type_one_error() {
    const auto t0 = Clock::now();
    int fired = 0;
    const int games = 1000;
    for (int i = 0; i < games; ++i) {
        GameConfig g;
        g.env = instance(static_cast<std::uint64_t>(10000 + i), b1());
        g.horizon = 2000;
        g.seed = derive_seed(kMaster, 1, static_cast<std::uint64_t>(i));
        fired += run_game(g).fire_time.has_value();
    }
    const double rate = static_cast<double>(fired) / games;
    report(1, rate <= kTypeOneRate, fmt("no-attack UCB1 detection rate %.3f", rate) + fmt(" <= %.3f", kTypeOneRate),
           seconds_since(t0));
}

void baseline_detection(int id, const char* preset) {
    const auto t0 = Clock::now();
    const auto panels = make_preset(preset, PresetOptions{20, kMaster});
    const auto it = std::find_if(panels.begin(), panels.end(),
                                 [&](const PanelExperiment& p) { return p.name.ends_with("-n10"); });
    const ExperimentReport rep = run_experiment(it->grid, it->trials, it->master_seed, 1);
    bool ok = true;
    double worst = 1.0;
    int checked = 0;
    for (const auto& s : rep.summaries) {
        if (s.delta_1k < b1() * (1 - 1e-12)) continue;
        ++checked;
        worst = std::min(worst, s.detection_rate);
        ok = ok && s.detection_rate >= kDetectRate;
    }
    report(id, ok && checked > 0,
           std::string(preset) + fmt(": min detection rate %.2f", worst) + fmt(" over %.0f instances with Delta_1K >= beta(1)", checked),
           seconds_since(t0));
}

void stealthy_ucb1() {
    const auto t0 = Clock::now();
    const int trials = 100;
    const double log_t = std::log(static_cast<double>(kT));
    const double gap = 0.2 * b1();  // beta(1) - Delta0
    const double d = gap;
    const double b1e = beta(1, kEta, kSigma, kN);
    const double s2 = kSigma * kSigma;
    int within = 0, fired = 0;
    for (int i = 0; i < trials; ++i) {
        const GameConfig g = stealthy_game(i, 0.8, Ucb1Spec{}, std::nullopt);
        const GameOutcome out = run_game(g);
        fired += out.fire_time.has_value();
        double spread = 0.0;
        for (int a = 2; a < kN; ++a) spread += std::fabs(g.env.mean(Arm(1)) - g.env.mean(Arm(a)));
        const double pulls_bound = (9 * s2 / (gap * gap) + 9 * kN * s2 / (d * d)) * log_t + (kN - 1);
        const double cost_bound = (18 * (b1() + b1e) * s2 / (gap * gap) + 9 * kN * s2 * (2 * b1() + 4 * b1e + d) / (d * d)) *
                                      log_t +
                                  (9 * s2 * log_t / (d * d) + 1) * spread + d * kN + 4 * b1e * kN + 4 * b1() * kN;
        const long others = kT - out.target_pulls;
        within += others <= pulls_bound && out.cost <= cost_bound;
    }
    const double share = static_cast<double>(within) / trials;
    const double rate = static_cast<double>(fired) / trials;
    report(4, share >= kBoundShare && rate <= kStealthDetectRate,
           fmt("within pull and cost bounds %.2f", share) + fmt(", detection rate %.2f", rate), seconds_since(t0));
}

void stealthy_failure() {
    const auto t0 = Clock::now();
    const int trials = 100;
    const double gap = 0.2 * b1();  // Delta0 - beta(1)
    const double log_t = std::log(static_cast<double>(kT));
    const double floor_term = std::pow(std::numbers::pi * std::numbers::pi * kN / (3 * kDelta), 0.4);
    int undetected = 0, within = 0;
    long worst = 0;
    for (int i = 0; i < trials; ++i) {
        const GameConfig g = stealthy_game(i, 1.2, Ucb1Spec{}, std::nullopt);
        const GameOutcome out = run_game(g);
        if (out.fire_time) continue;
        ++undetected;
        const double bound =
            std::max({3 * out.cost / gap, 81 * kSigma * kSigma * log_t / (gap * gap), floor_term});
        worst = std::max(worst, out.target_pulls);
        within += out.target_pulls <= bound && out.target_pulls <= kFailureCap * kT;
    }
    const double share = undetected ? static_cast<double>(within) / undetected : 1.0;
    report(5, share >= kBoundShare,
           fmt("undetected %.0f/100", undetected) + fmt(", within bound %.2f", share) +
               fmt(", max N_K %.0f", static_cast<double>(worst)),
           seconds_since(t0));
}

void stealthy_egreedy() {
    const auto t0 = Clock::now();
    const int trials = 100;
    int good = 0, fired = 0;
    for (int i = 0; i < trials; ++i) {
        const GameConfig g = stealthy_game(i, 0.8, EpsGreedySpec{kEgreedyC}, 0.0);
        const GameOutcome out = run_game(g);
        fired += out.fire_time.has_value();
        good += static_cast<double>(out.target_pulls) / kT >= kTargetFraction;
    }
    const double share = static_cast<double>(good) / trials;
    const double rate = static_cast<double>(fired) / trials;
    report(6, share >= kTargetShare && rate <= kStealthDetectRate,
           fmt("eps-greedy C=%.0f:", kEgreedyC) + fmt(" target fraction >= 0.8 in %.2f", share) +
               fmt(", detection rate %.2f", rate),
           seconds_since(t0));
}

void trigger() {
    const auto t0 = Clock::now();
    const int trials = 200;
    long min_target = std::numeric_limits<long>::max(), max_attacks = 0;
    int fired = 0;
    for (int i = 0; i < trials; ++i) {
        GameConfig g;
        g.env = instance(static_cast<std::uint64_t>(20000 + i), b1());
        g.learner = TriggerLearnerSpec{};
        g.attacker = TriggerAttackSpec{};
        g.horizon = kT;
        g.seed = derive_seed(kMaster, 7, static_cast<std::uint64_t>(i));
        const GameOutcome out = run_game(g);
        min_target = std::min(min_target, out.target_pulls);
        max_attacks = std::max(max_attacks, out.attacked_rounds);
        fired += out.fire_time.has_value();
    }
    const double rate = static_cast<double>(fired) / trials;

    // Sub-optimal pulls without attack, against plain UCB1 on the same draws.
    double trig = 0.0, plain = 0.0;
    const int seeds = 20;
    for (int i = 0; i < seeds; ++i) {
        GameConfig g;
        g.env = instance(static_cast<std::uint64_t>(30000 + i), b1());
        g.horizon = kT;
        g.seed = derive_seed(kMaster, 8, static_cast<std::uint64_t>(i));
        const Arm best(static_cast<int>(std::max_element(g.env.means.begin(), g.env.means.end()) - g.env.means.begin()) + 1);
        plain += static_cast<double>(kT - run_game(g).pulls_of(best));
        g.learner = TriggerLearnerSpec{};
        trig += static_cast<double>(kT - run_game(g).pulls_of(best));
    }
    const double ratio = trig / plain;
    report(7,
           min_target >= kTriggerFloor && max_attacks <= kTriggerAttacks && rate <= kStealthDetectRate &&
               ratio <= kTriggerRegretRatio,
           fmt("min N_K %.0f", static_cast<double>(min_target)) + fmt(", max attacked rounds %.0f", static_cast<double>(max_attacks)) +
               fmt(", detection rate %.3f", rate) + fmt(", sub-optimal pulls ratio %.2f", ratio),
           seconds_since(t0));
}

void detection_time() {
    const auto t0 = Clock::now();
    const int trials = 100;
    std::vector<double> times;
    for (int i = 0; i < trials; ++i) {
        GameConfig g;
        g.env = instance(static_cast<std::uint64_t>(40000 + i), b1());
        g.attacker = BaselineSpec{};
        g.horizon = kT;
        g.seed = derive_seed(kMaster, 9, static_cast<std::uint64_t>(i));
        const GameOutcome out = run_game(g);
        times.push_back(out.fire_time ? static_cast<double>(*out.fire_time) : std::numeric_limits<double>::infinity());
    }
    std::sort(times.begin(), times.end());
    const double median = (times[trials / 2 - 1] + times[trials / 2]) / 2;
    report(8, median <= 2 * kN, fmt("median fire time %.1f", median) + fmt(" <= %.0f", 2.0 * kN), seconds_since(t0));
}

void properties() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    long cases = 0;
    for (const auto& r : checks::all()) {
        cases += r.cases;
        if (!r.ok) {
            ok = false;
            if (detail.empty()) detail = " first failure: " + r.name + ": " + r.detail;
        }
    }
    const double secs = seconds_since(t0);
    report(9, ok && secs < kPropertySeconds, fmt("%.0f exact property cases", static_cast<double>(cases)) + detail, secs);
}

}  // namespace

int main() {
    std::printf("beta(1) = %.6f  (N=%d, sigma=%.2f, delta=%.2f)\n", b1(), kN, kSigma, kDelta);
    type_one_error();
    baseline_detection(2, "fig1");
    baseline_detection(3, "fig3");
    stealthy_ucb1();
    stealthy_failure();
    stealthy_egreedy();
    trigger();
    detection_time();
    properties();
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
