#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mabsec/confidence.hpp"
#include "mabsec/config_file.hpp"
#include "mabsec/errors.hpp"
#include "mabsec/game.hpp"
#include "mabsec/instance.hpp"
#include "mabsec/presets.hpp"
#include "mabsec/report.hpp"

namespace {

using namespace mabsec;

struct RunArgs {
    std::string learner = "ucb1";
    std::string attacker = "none";
    int num_arms = 10;
    long horizon = 10000;
    double sigma = 0.1;
    double delta = 0.05;
    double eta = 0.05;
    std::optional<double> slack;
    std::optional<int> target;
    std::uint64_t seed = 1;
    std::optional<double> override_reward;
    std::optional<double> override_beta;
    std::vector<double> means;
    std::optional<double> delta_1k;
    double exploration_c = 500.0;
    double baseline_margin = 0.0;
    double pin_margin = 1e-10;
    std::uint64_t instance_seed = 1;
};

int do_run(const RunArgs& a) {
    GameConfig g;
    g.env.num_arms = a.num_arms;
    g.env.sigma = a.sigma;
    g.env.target = Arm(a.target.value_or(a.num_arms));
    g.delta = a.delta;
    g.horizon = a.horizon;
    g.seed = a.seed;
    g.learner = parse_learner(a.learner, a.exploration_c, {});
    g.attacker = parse_attacker(a.attacker);
    if (auto* b = std::get_if<BaselineSpec>(&g.attacker)) b->margin = a.baseline_margin;
    if (auto* s = std::get_if<StealthySpec>(&g.attacker)) {
        s->eta = a.eta;
        s->slack = a.slack;
        s->pin_margin = a.pin_margin;
    }
    if (!a.means.empty()) {
        g.env.means = a.means;
    } else {
        const double d1k = a.delta_1k.value_or(beta(1, a.delta, a.sigma, a.num_arms));
        try {
            g.env = make_instance(a.num_arms, a.sigma, g.env.target, d1k, a.instance_seed);
        } catch (const ArgumentError& e) {
            throw ConfigError(e.what());
        }
    }
    g.first_reward_override = a.override_reward;
    if (a.override_beta) {
        g.first_reward_override = g.env.mean(g.env.target) + *a.override_beta * beta(1, a.delta, a.sigma, a.num_arms);
    }

    const GameOutcome out = run_game(g);
    nlohmann::ordered_json j;
    j["learner"] = learner_name(g.learner);
    j["attacker"] = attacker_name(g.attacker);
    j["means"] = g.env.means;
    j["target_arm"] = g.env.target.id();
    j["pulls"] = out.pulls;
    j["target_pulls"] = out.target_pulls;
    j["pulls_before_detection"] = out.pulls_before_detection;
    j["cost"] = out.cost;
    j["attacked_rounds"] = out.attacked_rounds;
    j["fire_time"] = out.fire_time ? nlohmann::ordered_json(*out.fire_time) : nlohmann::ordered_json(nullptr);
    j["realized_delta0_1k"] = out.realized_delta0_1k;
    std::cout << j.dump(2) << '\n';
    return 0;
}

void print_summary(const std::string& name, const ExperimentReport& r, const ReportPaths& paths) {
    std::cout << name << ": " << r.rows.size() << " rows -> " << paths.csv.string() << '\n';
    for (const auto& s : r.summaries) {
        std::cout << "  [" << s.cell_id << "] " << s.label << "  detection " << s.detection_rate << "  pulls "
                  << s.mean << " +- " << s.std << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reward-poisoning bandit simulator"};
    app.require_subcommand(1);

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "play one game and print the outcome as JSON");
    run_cmd->add_option("--learner", run.learner, "ucb1 | egreedy | trigger-reset | trigger-keep")->capture_default_str();
    run_cmd->add_option("--attacker", run.attacker, "none | baseline | stealthy | trigger")->capture_default_str();
    run_cmd->add_option("-N,--arms", run.num_arms)->capture_default_str();
    run_cmd->add_option("-T,--horizon", run.horizon)->capture_default_str();
    run_cmd->add_option("--sigma", run.sigma)->capture_default_str();
    run_cmd->add_option("--delta", run.delta)->capture_default_str();
    run_cmd->add_option("--eta", run.eta, "stealthy attack confidence")->capture_default_str();
    run_cmd->add_option("--slack", run.slack, "stealthy slack d (default: derived)");
    run_cmd->add_option("-K,--target", run.target, "target arm (default: N)");
    run_cmd->add_option("--seed", run.seed)->capture_default_str();
    auto* ovr = run_cmd->add_option("--override", run.override_reward, "round-1 pre-attack reward");
    run_cmd->add_option("--override-beta", run.override_beta, "round-1 reward mu_K + f beta(1)")->excludes(ovr);
    auto* means = run_cmd->add_option("--means", run.means, "explicit arm means")->delimiter(',');
    run_cmd->add_option("--delta-1k", run.delta_1k, "generated instance gap (default beta(1))")->excludes(means);
    run_cmd->add_option("--instance-seed", run.instance_seed)->capture_default_str();
    run_cmd->add_option("--exploration-c", run.exploration_c)->capture_default_str();
    run_cmd->add_option("--baseline-margin", run.baseline_margin)->capture_default_str();
    run_cmd->add_option("--pin-margin", run.pin_margin)->capture_default_str();

    std::string config_path, exp_out = "out";
    unsigned threads = 0;
    auto* exp_cmd = app.add_subcommand("experiment", "run a config-file experiment");
    exp_cmd->add_option("config", config_path)->required()->check(CLI::ExistingFile);
    exp_cmd->add_option("--out", exp_out, "output directory")->capture_default_str();
    exp_cmd->add_option("--threads", threads, "0 = all cores")->capture_default_str();

    std::vector<std::string> preset_list;
    std::string preset_out = "out";
    PresetOptions popts;
    bool list = false;
    auto* pre_cmd = app.add_subcommand("presets", "run named figure reproductions");
    pre_cmd->add_option("names", preset_list, "fig1..fig8, appendix-c, all");
    pre_cmd->add_option("--out", preset_out, "output directory")->capture_default_str();
    pre_cmd->add_option("--trials", popts.trials)->capture_default_str();
    pre_cmd->add_option("--seed", popts.master_seed)->capture_default_str();
    pre_cmd->add_option("--threads", threads, "0 = all cores")->capture_default_str();
    pre_cmd->add_flag("--list", list, "print preset names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return do_run(run);
        if (*exp_cmd) {
            const ExperimentSpec spec = load_experiment_config(config_path);
            const ExperimentReport r = run_experiment(spec.grid, spec.trials, spec.master_seed, threads);
            print_summary(spec.grid.name, r, write_report(r, exp_out));
            return 0;
        }
        if (list || preset_list.empty()) {
            for (const auto& n : preset_names()) std::cout << n << '\n';
            return 0;
        }
        for (const auto& name : preset_list) {
            for (const auto& panel : make_preset(name, popts)) {
                const ExperimentReport r = run_experiment(panel.grid, panel.trials, panel.master_seed, threads);
                print_summary(panel.name, r, write_report(r, std::filesystem::path(preset_out) / panel.name));
            }
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
