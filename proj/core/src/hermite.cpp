#include "gaussloc/hermite.hpp"

#include <cmath>
#include <stdexcept>

#include "gaussloc/rng.hpp"

namespace gaussloc {

double hermite(int n, double x) {
    if (n < 0) throw std::domain_error("hermite: n >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int k = 1; k < n; ++k) {
        const double next = (x * cur - prev) / (k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite_gf_partial(double z, double x, int trunc_n) {
    double sum = 0.0, zn = 1.0;
    for (int n = 0; n <= trunc_n; ++n) {
        sum += zn * hermite(n, x);
        zn *= z;
    }
    return sum;
}

double log_odd_double_factorial(std::int64_t k) {
    if (k < 0) throw std::domain_error("double factorial: k >= 0");
    // (2k-1)!! = (2k)! / (2^k k!)
    return std::lgamma(2.0 * k + 1.0) - k * std::log(2.0) - std::lgamma(k + 1.0);
}

double log_even_double_factorial(std::int64_t k) {
    if (k < 0) throw std::domain_error("double factorial: k >= 0");
    return k * std::log(2.0) + std::lgamma(k + 1.0);
}

std::pair<double, double> hermite_orthogonality_mc(int n, int m, double rho,
                                                   std::int64_t replicates,
                                                   std::uint64_t seed) {
    if (replicates < 2) throw std::invalid_argument("orthogonality mc: replicates >= 2");
    if (rho < -1.0 || rho > 1.0) throw std::domain_error("orthogonality mc: |rho| <= 1");
    CounterRng rng(seed);
    const double comp = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    double sum = 0.0, sumsq = 0.0;
    for (std::int64_t i = 0; i < replicates; ++i) {
        const auto z = rng.normal_pair(0, static_cast<std::uint64_t>(i));
        const double xi = z[0];
        const double eta = rho * z[0] + comp * z[1];
        const double v = hermite(n, xi) * hermite(m, eta);
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / replicates;
    const double var = std::max(0.0, sumsq / replicates - mean * mean);
    const double se = std::sqrt(var / (replicates - 1));
    return {mean, se};
}

}  // namespace gaussloc
