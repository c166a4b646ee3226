#include "mabsec/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "mabsec/confidence.hpp"
#include "mabsec/errors.hpp"
#include "mabsec/instance.hpp"

namespace mabsec {

namespace {
constexpr std::uint64_t kInstanceSalt = 0x1a5fULL << 48;
}

Moments moments(const std::vector<double>& xs) {
    Moments m;
    if (xs.empty()) return m;
    long double s = 0.0L;
    for (double x : xs) s += x;
    const long double mean = s / static_cast<long double>(xs.size());
    m.mean = static_cast<double>(mean);
    if (xs.size() > 1) {
        long double ss = 0.0L;
        for (double x : xs) ss += (x - mean) * (x - mean);
        m.std = static_cast<double>(std::sqrt(ss / static_cast<long double>(xs.size() - 1)));
    }
    return m;
}

GameConfig resolve_cell(const ExperimentCell& cell, std::uint64_t master_seed) {
    GameConfig game = cell.game;
    if (cell.generate_instance) {
        try {
            game.env = make_instance(game.env.num_arms, game.env.sigma, game.env.target, cell.delta_1k,
                                     derive_seed(master_seed, kInstanceSalt | cell.instance_id, 0));
        } catch (const ArgumentError& e) {
            throw ConfigError(e.what());
        }
    }
    if (cell.first_reward_beta) {
        const double b1 = beta(1, game.delta, game.env.sigma, game.env.num_arms);
        game.first_reward_override = game.env.mean(game.env.target) + *cell.first_reward_beta * b1;
    }
    game.validate();
    return game;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t cell_id, int trial) {
    return derive_seed(master_seed, cell_id, static_cast<std::uint64_t>(trial));
}

TrialRow make_row(std::size_t cell_id, int trial, std::uint64_t seed, const ExperimentCell& cell, const GameConfig& game,
                  const GameOutcome& outcome) {
    TrialRow row;
    row.cell_id = cell_id;
    row.trial = trial;
    row.seed = seed;
    row.delta_1k = cell.generate_instance ? cell.delta_1k : game.env.means.at(0) - game.env.mean(game.env.target);
    row.realized_delta0_1k = outcome.realized_delta0_1k;
    row.target_pulls = outcome.target_pulls;
    row.pulls_before_detection = outcome.pulls_before_detection;
    row.cost = outcome.cost;
    row.fire_time = outcome.fire_time;
    row.learner = learner_name(game.learner);
    row.attacker = attacker_name(game.attacker);
    return row;
}

std::vector<CellSummary> summarize(const std::vector<ExperimentCell>& cells, const std::vector<TrialRow>& rows) {
    std::vector<CellSummary> out(cells.size());
    std::vector<std::vector<double>> before(cells.size()), target(cells.size()), cost(cells.size()),
        fires(cells.size());
    std::vector<int> fired(cells.size(), 0);
    for (const auto& r : rows) {
        if (r.cell_id >= cells.size()) throw ArgumentError("row refers to an unknown cell");
        before[r.cell_id].push_back(static_cast<double>(r.pulls_before_detection));
        target[r.cell_id].push_back(static_cast<double>(r.target_pulls));
        cost[r.cell_id].push_back(r.cost);
        if (r.fire_time) {
            ++fired[r.cell_id];
            fires[r.cell_id].push_back(static_cast<double>(*r.fire_time));
        }
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
        CellSummary& s = out[c];
        s.cell_id = c;
        s.label = cells[c].label;
        s.delta_1k = cells[c].delta_1k;
        s.learner = learner_name(cells[c].game.learner);
        s.attacker = attacker_name(cells[c].game.attacker);
        s.trials = static_cast<int>(before[c].size());
        const Moments m = moments(before[c]);
        s.mean = m.mean;
        s.std = m.std;
        s.detection_rate = s.trials ? static_cast<double>(fired[c]) / s.trials : 0.0;
        s.target_pulls = moments(target[c]);
        s.cost = moments(cost[c]);
        if (!fires[c].empty()) {
            auto& f = fires[c];
            std::sort(f.begin(), f.end());
            const std::size_t n = f.size();
            s.median_fire_time = n % 2 ? f[n / 2] : 0.5 * (f[n / 2 - 1] + f[n / 2]);
        }
    }
    return out;
}

ExperimentReport run_experiment(const ExperimentGrid& grid, int trials, std::uint64_t master_seed, unsigned threads) {
    if (trials < 1) throw ConfigError("trials must be >= 1");

    ExperimentReport report;
    report.name = grid.name;
    report.trials = trials;
    report.master_seed = master_seed;
    std::vector<GameConfig> games;
    games.reserve(grid.cells.size());
    for (const auto& cell : grid.cells) {
        games.push_back(resolve_cell(cell, master_seed));
        ExperimentCell resolved = cell;
        resolved.game = games.back();
        report.cells.push_back(std::move(resolved));
    }

    const std::size_t jobs = grid.cells.size() * static_cast<std::size_t>(trials);
    report.rows.resize(jobs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&] {
        for (std::size_t i = next++; i < jobs; i = next++) {
            try {
                const std::size_t c = i / static_cast<std::size_t>(trials);
                const int k = static_cast<int>(i % static_cast<std::size_t>(trials));
                GameConfig game = games[c];
                game.seed = trial_seed(master_seed, c, k);
                game.keep_history = false;
                report.rows[i] = make_row(c, k, game.seed, report.cells[c], game, run_game(game));
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
                next = jobs;
            }
        }
    };

    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    report.summaries = summarize(report.cells, report.rows);
    return report;
}

}  // namespace mabsec
