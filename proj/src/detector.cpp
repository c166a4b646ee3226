#include "mabsec/detector.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mabsec/errors.hpp"

namespace mabsec {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Open intervals: touching endpoints already make the intersection empty.
// With sigma = 0 the intervals shrink to points and are read as closed.
bool empty_intersection(double lo, double hi, double sigma) { return sigma > 0.0 ? lo >= hi : lo > hi; }
}

void DetectionConfig::validate() const {
    if (!(delta > 0.0 && delta < 1.0)) throw ArgumentError("delta must lie in (0, 1)");
    if (!(sigma >= 0.0)) throw ArgumentError("sigma must be >= 0");
    if (num_arms < 1) throw ArgumentError("num_arms must be >= 1");
}

Detector::Detector(DetectionConfig cfg)
    : cfg_(cfg), lo_max_(cfg.num_arms, -kInf), hi_min_(cfg.num_arms, kInf) {
    cfg_.validate();
}

Verdict Detector::observe(Arm arm, double post_mean, long count, long t) {
    if (t != last_t_ + 1) {
        throw ProtocolError("detector: expected round " + std::to_string(last_t_ + 1) + ", got " +
                            std::to_string(t));
    }
    check_arm(arm, cfg_.num_arms);
    if (count < 1) throw ArgumentError("detector: count must be >= 1");
    last_t_ = t;

    const double r = cfg_.radius(count);
    double& lo = lo_max_[arm.slot()];
    double& hi = hi_min_[arm.slot()];
    lo = std::max(lo, post_mean - r);
    hi = std::min(hi, post_mean + r);
    if (!fire_time_ && empty_intersection(lo, hi, cfg_.sigma)) fire_time_ = t;
    return Verdict{fire_time_};
}

Verdict detector_oracle(const History& history, const DetectionConfig& cfg) {
    cfg.validate();
    const auto& rounds = history.rounds();
    const long horizon = history.size();
    for (long t = 1; t <= horizon; ++t) {
        for (int a = 1; a <= history.num_arms(); ++a) {
            const Arm arm(a);
            double lo = -kInf;
            double hi = kInf;
            bool any = false;
            for (long j = 1; j <= t; ++j) {
                long n = 0;
                long double sum = 0.0L;
                for (long s = 1; s <= j; ++s) {
                    const auto& rec = rounds[static_cast<std::size_t>(s - 1)];
                    if (rec.arm == arm) {
                        ++n;
                        sum += rec.post_reward;
                    }
                }
                if (n == 0) continue;
                any = true;
                const double mean = static_cast<double>(sum / static_cast<long double>(n));
                const double r = cfg.radius(n);
                lo = std::max(lo, mean - r);
                hi = std::min(hi, mean + r);
            }
            if (any && empty_intersection(lo, hi, cfg.sigma)) return Verdict{t};
        }
    }
    return Verdict{};
}

}  // namespace mabsec
