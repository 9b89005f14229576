#pragma once

#include <cstdint>
#include <utility>

namespace gaussloc {

/// Hermite polynomial under the generating-function normalization
/// e^{zx - z^2/2} = sum_n z^n H_n(x): H_0 = 1, H_1 = x,
/// H_{n+1}(x) = (x H_n(x) - H_{n-1}(x)) / (n+1).
double hermite(int n, double x);

/// Partial sum sum_{n<=trunc_n} z^n H_n(x) of the generating function.
double hermite_gf_partial(double z, double x, int trunc_n);

/// log((2k-1)!!) with the empty-product convention (-1)!! = 1.
double log_odd_double_factorial(std::int64_t k);

/// log((2k)!!) = k log 2 + log(k!).
double log_even_double_factorial(std::int64_t k);

/// Monte Carlo estimate of E[H_n(xi) H_m(eta)] for standard Gaussian
/// (xi, eta) with correlation rho; returns (estimate, standard_error).
/// Expectation: 0 when n != m, rho^n / n! when n == m.
std::pair<double, double> hermite_orthogonality_mc(int n, int m, double rho,
                                                   std::int64_t replicates,
                                                   std::uint64_t seed);

}  // namespace gaussloc
