#include "gaussloc/chenyan.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gaussloc/errors.hpp"
#include "gaussloc/hermite.hpp"

namespace gaussloc {

double series_coeff(int n, int d) {
    if (n < 0 || d < 1) throw std::domain_error("series_coeff: n >= 0, d >= 1");
    double a = 1.0;
    for (int k = 1; k <= n; ++k) a *= (k - 1 + 0.5 * d) / k;
    return a;
}

namespace {

double composition_sum(int n, int d, double log_acc) {
    if (d == 1)
        return std::exp(log_acc + log_odd_double_factorial(n) -
                        log_even_double_factorial(n));
    double sum = 0.0;
    for (int k = 0; k <= n; ++k)
        sum += composition_sum(n - k, d - 1,
                               log_acc + log_odd_double_factorial(k) -
                                   log_even_double_factorial(k));
    return sum;
}

}  // namespace

double series_coeff_bruteforce(int n, int d) {
    if (n < 0 || d < 1) throw std::domain_error("series_coeff: n >= 0, d >= 1");
    return composition_sum(n, d, 0.0);
}

double chenyan_lhs(double x, int d, int trunc_n, double tail_tol) {
    if (x < 0.0 || x >= 1.0) throw std::domain_error("chenyan_lhs: x in [0,1)");
    if (x == 0.0 || trunc_n == 0) return 0.0;
    double sum = 0.0, coeff = 1.0, xn = 1.0, last_term = 0.0;
    for (int n = 1; n <= trunc_n; ++n) {
        coeff *= (n - 1 + 0.5 * d) / n;
        xn *= x;
        last_term = 2.0 * n * coeff * xn;
        sum += last_term;
    }
    // Term ratios x (n + d/2)/n decrease toward x, so the last ratio bounds
    // the tail geometrically.
    const double r = x * (trunc_n + 0.5 * d) / trunc_n;
    const double tail = r < 1.0 ? last_term * r / (1.0 - r)
                                : std::numeric_limits<double>::infinity();
    if (!(tail <= tail_tol * std::max(sum, 1.0)))
        throw NotConvergedError("chenyan_lhs: tail bound above tolerance");
    return sum;
}

std::pair<double, double> chenyan_ratio_scan(int d, const std::vector<double>& xs,
                                             int trunc_n) {
    if (xs.empty()) throw std::invalid_argument("chenyan_ratio_scan: empty grid");
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (double x : xs) {
        const double rhs = x * std::pow(1.0 - x, -(0.5 * d + 1.0));
        const double ratio = chenyan_lhs(x, d, trunc_n) / rhs;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

}  // namespace gaussloc
