#include "mabsec/game.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mabsec/errors.hpp"
#include "mabsec/rng.hpp"
#include "mabsec/ucb1.hpp"

namespace mabsec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

std::string learner_name(const LearnerSpec& spec) {
    return std::visit(overloaded{
                          [](const Ucb1Spec&) -> std::string { return "ucb1"; },
                          [](const EpsGreedySpec&) -> std::string { return "egreedy"; },
                          [](const TriggerLearnerSpec& s) -> std::string {
                              return s.variant == TriggerVariant::ResetHistory ? "trigger-reset" : "trigger-keep";
                          },
                      },
                      spec);
}

std::string attacker_name(const AttackerSpec& spec) {
    return std::visit(overloaded{
                          [](const NoAttackSpec&) -> std::string { return "none"; },
                          [](const BaselineSpec&) -> std::string { return "baseline"; },
                          [](const StealthySpec&) -> std::string { return "stealthy"; },
                          [](const TriggerAttackSpec&) -> std::string { return "trigger"; },
                      },
                      spec);
}

void GameConfig::validate() const {
    try {
        env.validate();
        detection().validate();
        if (const auto* eg = std::get_if<EpsGreedySpec>(&learner); eg && !(eg->exploration_c >= 3.0)) {
            throw ArgumentError("exploration constant C must be >= 3");
        }
        if (const auto* tl = std::get_if<TriggerLearnerSpec>(&learner)) {
            TriggerSchedule::make(env.num_arms, env.sigma, tl->anchors);
        }
        if (const auto* b = std::get_if<BaselineSpec>(&attacker)) {
            BaselineAttackerConfig{env.target, b->margin, b->confidence}.validate(env.num_arms);
        }
        if (const auto* s = std::get_if<StealthySpec>(&attacker)) {
            StealthyAttackerConfig{env.target, s->eta, s->slack, std::nullopt, s->pin_margin}.validate(env.num_arms);
        }
    } catch (const ArgumentError& e) {
        throw ConfigError(e.what());
    }
    if (horizon < env.num_arms) throw ConfigError("horizon T must be >= N");
    if (std::holds_alternative<TriggerAttackSpec>(attacker) && !std::holds_alternative<TriggerLearnerSpec>(learner)) {
        throw ConfigError("the trigger attacker only applies to the trigger learner");
    }
    if (first_reward_override && !std::isfinite(*first_reward_override)) {
        throw ConfigError("first reward override must be finite");
    }
}

std::unique_ptr<Learner> make_learner(const GameConfig& cfg) {
    return std::visit(overloaded{
                          [&](const Ucb1Spec&) -> std::unique_ptr<Learner> {
                              return std::make_unique<Ucb1>(cfg.env.num_arms, cfg.env.sigma);
                          },
                          [&](const EpsGreedySpec& s) -> std::unique_ptr<Learner> {
                              return std::make_unique<EpsGreedy>(cfg.env.num_arms, s.exploration_c);
                          },
                          [&](const TriggerLearnerSpec& s) -> std::unique_ptr<Learner> {
                              return std::make_unique<TriggerLearner>(
                                  TriggerSchedule::make(cfg.env.num_arms, cfg.env.sigma, s.anchors), s.variant);
                          },
                      },
                      cfg.learner);
}

std::unique_ptr<Attacker> make_attacker(const GameConfig& cfg) {
    const DetectionConfig det = cfg.detection();
    return std::visit(
        overloaded{
            [&](const NoAttackSpec&) -> std::unique_ptr<Attacker> { return std::make_unique<NoAttack>(); },
            [&](const BaselineSpec& s) -> std::unique_ptr<Attacker> {
                return std::make_unique<BaselineAttacker>(
                    BaselineAttackerConfig{cfg.env.target, s.margin, s.confidence}, det);
            },
            [&](const StealthySpec& s) -> std::unique_ptr<Attacker> {
                StealthyAttackerConfig sc{cfg.env.target, s.eta, s.slack, std::nullopt, s.pin_margin};
                if (!s.slack && std::holds_alternative<Ucb1Spec>(cfg.learner)) sc.target_mean = cfg.env.mean(cfg.env.target);
                return std::make_unique<StealthyAttacker>(sc, det);
            },
            [&](const TriggerAttackSpec&) -> std::unique_ptr<Attacker> {
                const auto& tl = std::get<TriggerLearnerSpec>(cfg.learner);
                return std::make_unique<TriggerAttacker>(
                    TriggerSchedule::make(cfg.env.num_arms, cfg.env.sigma, tl.anchors), cfg.env.target);
            },
        },
        cfg.attacker);
}

GameOutcome play(const EnvironmentSpec& env, Learner& learner, Attacker& attacker, const DetectionConfig& detection,
                 const PlayOptions& opts) {
    env.validate();
    RngStream env_rng(opts.seed, StreamRole::Environment);
    RngStream learner_rng(opts.seed, StreamRole::Learner);
    History history(env.num_arms);
    Detector detector(detection);

    GameOutcome out;
    out.realized_delta0_1k = std::numeric_limits<double>::quiet_NaN();
    for (long t = 1; t <= opts.horizon; ++t) {
        const Arm arm = learner.select(t, learner_rng);
        check_arm(arm, env.num_arms);
        double pre = sample_reward(env, arm, env_rng);
        if (t == 1 && opts.first_reward_override) pre = *opts.first_reward_override;

        const double alpha = attacker.manipulate(t, arm, pre, history);
        const RoundRecord& rec = history.record_round(t, arm, pre, alpha);
        learner.observe(t, arm, rec.post_reward);

        const auto means = *history.empirical_means(arm);
        const Verdict v = detector.observe(arm, means.post_mean, means.count, t);

        if (alpha != 0.0) ++out.attacked_rounds;
        if (arm == env.target && (!v.detected() || *v.fire_time == t)) ++out.pulls_before_detection;
        if (t == env.num_arms) {
            if (auto m1 = history.empirical_means(Arm(1))) out.realized_delta0_1k = m1->post_mean - env.mean(env.target);
        }
    }

    out.pulls.resize(static_cast<std::size_t>(env.num_arms));
    for (int a = 1; a <= env.num_arms; ++a) out.pulls[static_cast<std::size_t>(a - 1)] = history.count(Arm(a));
    out.target_pulls = history.count(env.target);
    out.cost = history.cumulative_cost();
    out.fire_time = detector.fire_time();
    if (opts.keep_history) out.history = std::move(history);
    return out;
}

GameOutcome run_game(const GameConfig& cfg) {
    cfg.validate();
    auto learner = make_learner(cfg);
    auto attacker = make_attacker(cfg);
    return play(cfg.env, *learner, *attacker, cfg.detection(),
                PlayOptions{cfg.horizon, cfg.seed, cfg.first_reward_override, cfg.keep_history});
}

}  // namespace mabsec
