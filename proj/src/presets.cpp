#include "mabsec/presets.hpp"

#include <cmath>

#include "mabsec/confidence.hpp"
#include "mabsec/errors.hpp"

namespace mabsec {

namespace {

constexpr double kSigma = 0.1;
constexpr double kDelta = 0.05;
constexpr double kEpsGreedyC = 500.0;

struct Panel {
    const char* suffix;
    int num_arms;
    long horizon;
};
constexpr Panel kPanels[] = {{"n10", 10, 10000}, {"n30", 30, 20000}};

enum class Kind { DetectProb, TargetPulls, Conditioned, DetectTime };

GameConfig base_game(const Panel& p, bool egreedy) {
    GameConfig g;
    g.env.num_arms = p.num_arms;
    g.env.sigma = kSigma;
    g.env.means.assign(static_cast<std::size_t>(p.num_arms), 0.0);
    g.env.target = Arm(p.num_arms);
    g.delta = kDelta;
    g.horizon = p.horizon;
    if (egreedy) {
        g.learner = EpsGreedySpec{kEpsGreedyC};
    } else {
        g.learner = Ucb1Spec{};
    }
    return g;
}

std::string fmt_factor(double f) {
    if (f == 0.5) return "beta1/2";
    if (f == 1.0) return "beta1";
    if (f == 2.0) return "2beta1";
    return std::to_string(f) + "beta1";
}

ExperimentGrid build(const std::string& name, Kind kind, const Panel& p, bool egreedy) {
    ExperimentGrid grid;
    grid.name = name;
    const GameConfig base = base_game(p, egreedy);
    const double b1 = beta(1, kDelta, kSigma, p.num_arms);
    const double factors[] = {0.5, 1.0, 2.0};

    auto add = [&](std::string label, double d1k, std::uint64_t instance, AttackerSpec atk,
                   std::optional<double> frb) {
        ExperimentCell cell;
        cell.label = std::move(label);
        cell.game = base;
        cell.game.attacker = std::move(atk);
        cell.delta_1k = d1k;
        cell.instance_id = instance;
        cell.first_reward_beta = frb;
        grid.cells.push_back(std::move(cell));
    };

    switch (kind) {
        case Kind::DetectProb: {
            const auto ds = detection_grid(p.num_arms, kSigma, kDelta);
            for (std::size_t i = 0; i < ds.size(); ++i) {
                add("instance " + std::to_string(i), ds[i], i, BaselineSpec{}, std::nullopt);
            }
            break;
        }
        case Kind::TargetPulls:
            for (std::size_t i = 0; i < 3; ++i) {
                add("baseline " + fmt_factor(factors[i]), factors[i] * b1, i, BaselineSpec{}, std::nullopt);
                add("stealthy " + fmt_factor(factors[i]), factors[i] * b1, i, StealthySpec{}, std::nullopt);
            }
            break;
        case Kind::Conditioned:
            for (double v : {0.8, 1.2}) {
                const std::string cond = v < 1.0 ? "(1-v)beta1" : "(1+v)beta1";
                add("baseline " + cond, b1, 0, BaselineSpec{}, v);
                add("stealthy " + cond, b1, 0, StealthySpec{}, v);
            }
            break;
        case Kind::DetectTime:
            for (std::size_t i = 0; i < 3; ++i) {
                add("baseline " + fmt_factor(factors[i]), factors[i] * b1, i, BaselineSpec{}, std::nullopt);
            }
            break;
    }
    return grid;
}

struct FigureDef {
    const char* name;
    Kind kind;
    bool egreedy;
};
constexpr FigureDef kFigures[] = {
    {"fig1", Kind::DetectProb, false},  {"fig2", Kind::TargetPulls, false}, {"fig3", Kind::DetectProb, true},
    {"fig4", Kind::TargetPulls, true},  {"fig5", Kind::Conditioned, false}, {"fig6", Kind::Conditioned, true},
    {"fig7", Kind::DetectTime, false},  {"fig8", Kind::DetectTime, true},
};

}  // namespace

std::vector<double> detection_grid(int num_arms, double sigma, double delta) {
    const double b1 = beta(1, delta, sigma, num_arms);
    std::vector<double> out;
    for (int i = 0; i < 10; ++i) out.push_back(b1 / std::ldexp(1.0, 4 - i));
    return out;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& f : kFigures) names.emplace_back(f.name);
    names.emplace_back("appendix-c");
    names.emplace_back("all");
    return names;
}

std::vector<PanelExperiment> make_preset(std::string_view name, const PresetOptions& opts) {
    if (opts.trials < 1) throw ConfigError("trials must be >= 1");
    std::vector<const FigureDef*> figs;
    if (name == "all" || name == "appendix-c") {
        for (const auto& f : kFigures) {
            if (name == "all" || (std::string_view(f.name) != "fig1" && std::string_view(f.name) != "fig2")) {
                figs.push_back(&f);
            }
        }
    } else {
        for (const auto& f : kFigures) {
            if (name == f.name) figs.push_back(&f);
        }
    }
    if (figs.empty()) throw ConfigError("unknown preset '" + std::string(name) + "'");

    std::vector<PanelExperiment> out;
    for (const FigureDef* f : figs) {
        for (const auto& p : kPanels) {
            const std::string panel = std::string(f->name) + "-" + p.suffix;
            out.push_back({panel, build(panel, f->kind, p, f->egreedy), opts.trials, opts.master_seed});
        }
    }
    return out;
}

}  // namespace mabsec
