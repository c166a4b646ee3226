#pragma once

namespace mabsec {

// Confidence radius sqrt((2 sigma^2 / n) * ln(pi^2 N n^2 / (3 conf))).
// Returns 0 when sigma == 0. Throws ArgumentError if n < 1, conf not in (0,1),
// sigma < 0 or num_arms < 1.
double beta(long n, double conf, double sigma, int num_arms);

}  // namespace mabsec
