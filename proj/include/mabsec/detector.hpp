#pragma once

#include <optional>
#include <vector>

#include "mabsec/arm.hpp"
#include "mabsec/confidence.hpp"
#include "mabsec/history.hpp"

namespace mabsec {

// Parameters of the homogeneity test. delta is public knowledge: learners,
// attackers and the detector share it.
struct DetectionConfig {
    double delta = 0.05;
    double sigma = 0.1;
    int num_arms = 2;

    void validate() const;

    double radius(long n) const { return mabsec::beta(n, delta, sigma, num_arms); }
    double radius(long n, double conf) const { return mabsec::beta(n, conf, sigma, num_arms); }
};

// Clean when fire_time is empty.
struct Verdict {
    std::optional<long> fire_time;

    bool detected() const { return fire_time.has_value(); }
    bool operator==(const Verdict&) const = default;
};

// Incremental form of the test: per arm, the running intersection of the open
// intervals (mean - beta(n), mean + beta(n)) over every prefix in which the arm
// had data. Fires the first round some arm's intersection is empty. Latched.
// When sigma = 0 the radius is 0 and each interval is the single point
// {mean}; the test then fires only once two means differ.
class Detector {
public:
    explicit Detector(DetectionConfig cfg);

    // Called once per round t (t = previous + 1) for the arm pulled in round t,
    // with its updated post-attack mean and count.
    Verdict observe(Arm arm, double post_mean, long count, long t);

    const DetectionConfig& config() const { return cfg_; }
    Verdict verdict() const { return Verdict{fire_time_}; }
    bool fired() const { return fire_time_.has_value(); }
    std::optional<long> fire_time() const { return fire_time_; }
    double lo_max(Arm arm) const { return lo_max_.at(arm.slot()); }
    double hi_min(Arm arm) const { return hi_min_.at(arm.slot()); }
    long last_round() const { return last_t_; }

private:
    DetectionConfig cfg_;
    std::vector<double> lo_max_;
    std::vector<double> hi_min_;
    std::optional<long> fire_time_;
    long last_t_ = 0;
};

// Replays the test on a finished history from scratch: for every t and arm,
// recomputes every prefix mean by a full rescan and intersects the intervals.
// O(N T^3); meant for audits and tests, not for long games.
Verdict detector_oracle(const History& history, const DetectionConfig& cfg);

}  // namespace mabsec
