#include "mabsec/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>
#include <variant>

#include "json.hpp"

#include "mabsec/errors.hpp"

namespace mabsec {

namespace {

using nlohmann::ordered_json;

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

template <class T>
std::string integer(T x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

ordered_json number_or_null(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json moments_json(const Moments& m) { return ordered_json{{"mean", m.mean}, {"std", m.std}}; }

ordered_json learner_json(const LearnerSpec& spec) {
    ordered_json j{{"kind", learner_name(spec)}};
    if (const auto* eg = std::get_if<EpsGreedySpec>(&spec)) j["exploration_c"] = eg->exploration_c;
    if (const auto* tl = std::get_if<TriggerLearnerSpec>(&spec)) j["anchors"] = tl->anchors;
    return j;
}

ordered_json attacker_json(const AttackerSpec& spec) {
    ordered_json j{{"kind", attacker_name(spec)}};
    if (const auto* b = std::get_if<BaselineSpec>(&spec)) {
        j["margin"] = b->margin;
        j["confidence"] = b->confidence;
    }
    if (const auto* s = std::get_if<StealthySpec>(&spec)) {
        j["eta"] = s->eta;
        j["slack"] = s->slack ? ordered_json(*s->slack) : ordered_json("auto");
        j["pin_margin"] = s->pin_margin;
    }
    return j;
}

ordered_json cell_json(std::size_t id, const ExperimentCell& cell) {
    const GameConfig& g = cell.game;
    ordered_json j;
    j["cell_id"] = id;
    j["label"] = cell.label;
    j["num_arms"] = g.env.num_arms;
    j["horizon"] = g.horizon;
    j["sigma"] = g.env.sigma;
    j["delta"] = g.delta;
    j["target_arm"] = g.env.target.id();
    j["delta_1k"] = cell.delta_1k;
    j["generated_instance"] = cell.generate_instance;
    j["instance_id"] = cell.instance_id;
    j["means"] = g.env.means;
    j["first_reward_beta"] = cell.first_reward_beta ? ordered_json(*cell.first_reward_beta) : ordered_json(nullptr);
    j["first_reward_override"] =
        g.first_reward_override ? ordered_json(*g.first_reward_override) : ordered_json(nullptr);
    j["learner"] = learner_json(g.learner);
    j["attacker"] = attacker_json(g.attacker);
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

std::string rows_csv(const ExperimentReport& report) {
    std::string s = kCsvHeader;
    s += '\n';
    for (const auto& r : report.rows) {
        s += integer(r.cell_id) + ',' + integer(r.trial) + ',' + integer(r.seed) + ',' + num(r.delta_1k) + ',' +
             num(r.realized_delta0_1k) + ',' + integer(r.target_pulls) + ',' + integer(r.pulls_before_detection) +
             ',' + num(r.cost) + ',' + (r.fire_time ? integer(*r.fire_time) : std::string()) + ',' + r.learner +
             ',' + r.attacker + '\n';
    }
    return s;
}

std::string summary_json(const ExperimentReport& report) {
    ordered_json root;
    ordered_json config;
    config["name"] = report.name;
    config["trials"] = report.trials;
    config["master_seed"] = report.master_seed;
    config["instance_rule"] = "mu_K = 0, mu_1 = delta_1k, other means N(0,1) redrawn while above mu_1";
    config["cells"] = ordered_json::array();
    for (std::size_t c = 0; c < report.cells.size(); ++c) config["cells"].push_back(cell_json(c, report.cells[c]));
    root["config"] = std::move(config);

    ordered_json cells = ordered_json::array();
    for (const auto& s : report.summaries) {
        ordered_json j;
        j["cell_id"] = s.cell_id;
        j["label"] = s.label;
        j["delta_1k"] = number_or_null(s.delta_1k);
        j["learner"] = s.learner;
        j["attacker"] = s.attacker;
        j["trials"] = s.trials;
        j["mean"] = s.mean;
        j["std"] = s.std;
        j["detection_rate"] = s.detection_rate;
        j["target_pulls"] = moments_json(s.target_pulls);
        j["cost"] = moments_json(s.cost);
        j["median_fire_time"] = s.median_fire_time ? ordered_json(*s.median_fire_time) : ordered_json(nullptr);
        cells.push_back(std::move(j));
    }
    root["cells"] = std::move(cells);
    return root.dump(2) + '\n';
}

ReportPaths write_report(const ExperimentReport& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    ReportPaths paths{dir / "rows.csv", dir / "summary.json"};
    write_file(paths.csv, rows_csv(report));
    write_file(paths.json, summary_json(report));
    return paths;
}

}  // namespace mabsec
