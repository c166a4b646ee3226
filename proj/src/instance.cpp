#include "mabsec/instance.hpp"

#include <cmath>

#include "mabsec/errors.hpp"

namespace mabsec {

namespace {
constexpr int kMaxRedraws = 1'000'000;
}

EnvironmentSpec make_instance(int num_arms, double sigma, Arm target, double delta_1k, RngStream& rng) {
    if (num_arms < 2) throw ArgumentError("instance needs at least 2 arms");
    check_arm(target, num_arms);
    if (target == Arm(1)) throw ArgumentError("instance target must differ from arm 1");
    if (!std::isfinite(delta_1k)) throw ArgumentError("delta_1k must be finite");

    EnvironmentSpec env{num_arms, sigma, std::vector<double>(static_cast<std::size_t>(num_arms), 0.0), target};
    env.means[0] = delta_1k;
    env.means[target.slot()] = 0.0;
    for (int a = 2; a <= num_arms; ++a) {
        if (Arm(a) == target) continue;
        double m = rng.normal();
        int tries = 0;
        while (m > delta_1k) {
            if (++tries > kMaxRedraws) throw ArgumentError("delta_1k too small to draw the remaining means");
            m = rng.normal();
        }
        env.means[static_cast<std::size_t>(a - 1)] = m;
    }
    env.validate();
    return env;
}

EnvironmentSpec make_instance(int num_arms, double sigma, Arm target, double delta_1k, std::uint64_t seed) {
    RngStream rng(seed, StreamRole::Instance);
    return make_instance(num_arms, sigma, target, delta_1k, rng);
}

}  // namespace mabsec
