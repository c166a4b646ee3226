#include "mabsec/confidence.hpp"

#include <cmath>
#include <numbers>

#include "mabsec/errors.hpp"

namespace mabsec {

double beta(long n, double conf, double sigma, int num_arms) {
    if (n < 1) throw ArgumentError("beta: n must be >= 1");
    if (!(conf > 0.0 && conf < 1.0)) throw ArgumentError("beta: confidence must lie in (0, 1)");
    if (!(sigma >= 0.0)) throw ArgumentError("beta: sigma must be >= 0");
    if (num_arms < 1) throw ArgumentError("beta: num_arms must be >= 1");
    if (sigma == 0.0) return 0.0;
    const double nd = static_cast<double>(n);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double log_term = std::log(pi2 * num_arms * nd * nd / (3.0 * conf));
    return std::sqrt(2.0 * sigma * sigma / nd * log_term);
}

}  // namespace mabsec
