#include "mabsec/environment.hpp"

#include <cmath>
#include <string>

namespace mabsec {

void EnvironmentSpec::validate() const {
    if (num_arms < 2) throw ArgumentError("num_arms must be >= 2");
    if (static_cast<int>(means.size()) != num_arms) {
        throw ArgumentError("expected " + std::to_string(num_arms) + " means, got " +
                            std::to_string(means.size()));
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ArgumentError("sigma must be finite and >= 0");
    check_arm(target, num_arms);
}

double sample_reward(const EnvironmentSpec& env, Arm arm, RngStream& rng) {
    check_arm(arm, env.num_arms);
    // The draw happens even when sigma == 0 so the stream position depends
    // only on the round count.
    const double z = rng.normal();
    return env.mean(arm) + env.sigma * z;
}

}  // namespace mabsec
