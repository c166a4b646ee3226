#pragma once

#include <cstdint>
#include <random>

namespace mabsec {

// Fixed stream ids; one stream per role so that inserting an attacker never
// perturbs environment noise or learner exploration.
enum class StreamRole : std::uint32_t {
    Environment = 0,
    Learner = 1,
    Instance = 2,
};

// Deterministic random stream keyed by (seed, stream id).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint32_t stream_id);
    RngStream(std::uint64_t seed, StreamRole role)
        : RngStream(seed, static_cast<std::uint32_t>(role)) {}

    double normal();
    double uniform01();
    // Uniform over {lo, ..., hi}.
    int uniform_int(int lo, int hi);
    bool coin();

    std::uint64_t seed() const { return seed_; }
    std::uint32_t stream_id() const { return stream_id_; }

private:
    std::uint64_t seed_;
    std::uint32_t stream_id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

// Mixes (master, a, b) into a child seed; used for per-(cell, trial) seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

}  // namespace mabsec
