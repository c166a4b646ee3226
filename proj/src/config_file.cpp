#include "mabsec/config_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mabsec/confidence.hpp"
#include "mabsec/errors.hpp"

namespace mabsec {

namespace {

const std::set<std::string, std::less<>> kKeys = {
    "name",        "learner",         "attacker",            "num_arms", "horizon",           "sigma",
    "delta",       "target_arm",      "exploration_c",       "anchors",  "eta",               "slack",
    "pin_margin",  "baseline_margin", "baseline_confidence", "delta_1k", "delta_1k_beta",     "means",
    "trials",      "master_seed",     "first_reward_beta",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class Int>
Int parse_int(std::string_view text, std::string_view what) {
    text = trim(text);
    Int v{};
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size() || text.empty()) {
        throw ConfigError(std::string(what) + ": not an integer: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

double parse_real(std::string_view text, std::string_view what) {
    text = trim(text);
    double v = 0.0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size() || text.empty() || !std::isfinite(v)) {
        throw ConfigError(std::string(what) + ": not a finite real: '" + std::string(text) + "'");
    }
    return v;
}

std::vector<double> parse_real_list(std::string_view text, std::string_view what) {
    std::vector<double> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(parse_real(text.substr(pos, comma - pos), what));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

LearnerSpec parse_learner(std::string_view name, double exploration_c, std::vector<double> anchors) {
    if (name == "ucb1") return Ucb1Spec{};
    if (name == "egreedy") return EpsGreedySpec{exploration_c};
    if (name == "trigger-reset") return TriggerLearnerSpec{TriggerVariant::ResetHistory, std::move(anchors)};
    if (name == "trigger-keep") return TriggerLearnerSpec{TriggerVariant::KeepHistory, std::move(anchors)};
    throw ConfigError("unknown learner '" + std::string(name) + "'");
}

AttackerSpec parse_attacker(std::string_view name) {
    if (name == "none") return NoAttackSpec{};
    if (name == "baseline") return BaselineSpec{};
    if (name == "stealthy") return StealthySpec{};
    if (name == "trigger") return TriggerAttackSpec{};
    throw ConfigError("unknown attacker '" + std::string(name) + "'");
}

ExperimentSpec parse_experiment_config(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key(trim(line.substr(0, eq)));
        if (!kKeys.contains(key)) throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (!kv.emplace(key, std::string(trim(line.substr(eq + 1)))).second) {
            throw ConfigError("line " + std::to_string(lineno) + ": repeated key '" + key + "'");
        }
    }
    auto get = [&](std::string_view key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto real_or = [&](std::string_view key, double fallback) {
        const std::string* v = get(key);
        return v ? parse_real(*v, key) : fallback;
    };

    ExperimentSpec spec;
    GameConfig game;
    game.env.num_arms = get("num_arms") ? parse_int<int>(*get("num_arms"), "num_arms") : 10;
    game.env.sigma = real_or("sigma", 0.1);
    game.delta = real_or("delta", 0.05);
    game.horizon = get("horizon") ? parse_int<long>(*get("horizon"), "horizon") : 10000;
    game.env.target = Arm(get("target_arm") ? parse_int<int>(*get("target_arm"), "target_arm") : game.env.num_arms);
    game.env.means.assign(static_cast<std::size_t>(std::max(game.env.num_arms, 0)), 0.0);

    const std::vector<double> anchors = get("anchors") ? parse_real_list(*get("anchors"), "anchors") : std::vector<double>{};
    game.learner = parse_learner(get("learner") ? *get("learner") : "ucb1", real_or("exploration_c", 500.0), anchors);
    game.attacker = parse_attacker(get("attacker") ? *get("attacker") : "none");
    if (auto* b = std::get_if<BaselineSpec>(&game.attacker)) {
        b->margin = real_or("baseline_margin", b->margin);
        b->confidence = real_or("baseline_confidence", b->confidence);
    }
    if (auto* s = std::get_if<StealthySpec>(&game.attacker)) {
        s->eta = real_or("eta", s->eta);
        s->pin_margin = real_or("pin_margin", s->pin_margin);
        if (const std::string* v = get("slack"); v && *v != "auto") s->slack = parse_real(*v, "slack");
    }

    spec.grid.name = get("name") ? *get("name") : "experiment";
    spec.trials = get("trials") ? parse_int<int>(*get("trials"), "trials") : 20;
    spec.master_seed = get("master_seed") ? parse_int<std::uint64_t>(*get("master_seed"), "master_seed") : 1;
    if (spec.trials < 1) throw ConfigError("trials must be >= 1");

    std::optional<double> frb;
    if (const std::string* v = get("first_reward_beta")) frb = parse_real(*v, "first_reward_beta");

    const int given = (get("delta_1k") != nullptr) + (get("delta_1k_beta") != nullptr) + (get("means") != nullptr);
    if (given > 1) throw ConfigError("use only one of delta_1k, delta_1k_beta, means");

    if (const std::string* v = get("means")) {
        ExperimentCell cell;
        cell.game = game;
        cell.game.env.means = parse_real_list(*v, "means");
        cell.generate_instance = false;
        cell.first_reward_beta = frb;
        cell.label = "fixed";
        cell.game.validate();
        cell.delta_1k = cell.game.env.means.at(0) - cell.game.env.mean(cell.game.env.target);
        spec.grid.cells.push_back(std::move(cell));
        return spec;
    }

    std::vector<double> deltas;
    if (const std::string* v = get("delta_1k")) {
        deltas = parse_real_list(*v, "delta_1k");
    } else {
        const auto factors = get("delta_1k_beta") ? parse_real_list(*get("delta_1k_beta"), "delta_1k_beta")
                                                  : std::vector<double>{1.0};
        double b1 = 0.0;
        try {
            b1 = beta(1, game.delta, game.env.sigma, game.env.num_arms);
        } catch (const ArgumentError& e) {
            throw ConfigError(e.what());
        }
        for (double f : factors) deltas.push_back(f * b1);
    }
    if (deltas.empty()) throw ConfigError("empty delta_1k list");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        ExperimentCell cell;
        cell.game = game;
        cell.delta_1k = deltas[i];
        cell.instance_id = i;
        cell.first_reward_beta = frb;
        cell.label = "delta_1k=" + std::to_string(deltas[i]);
        spec.grid.cells.push_back(std::move(cell));
    }
    return spec;
}

ExperimentSpec load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_experiment_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace mabsec
