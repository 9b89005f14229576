#pragma once

#include <utility>
#include <vector>

namespace gaussloc {

/// [x^n] (1-x)^{-d/2} via the recurrence a_0 = 1, a_n = a_{n-1} (n-1+d/2)/n.
/// Equals the composition sum over k_1+...+k_d = n of
/// prod_j (2k_j-1)!!/(2k_j)!!.
double series_coeff(int n, int d);

/// The same coefficient by brute-force enumeration of compositions
/// (exponential in d; intended for cross-checks with small n, d).
double series_coeff_bruteforce(int n, int d);

/// Partial sum sum_{n=1}^{trunc_n} 2n * series_coeff(n, d) * x^n.
/// Throws NotConvergedError when the geometric tail bound at trunc_n
/// exceeds `tail_tol`.
double chenyan_lhs(double x, int d, int trunc_n, double tail_tol = 1e-10);

/// Min and max of chenyan_lhs / (x (1-x)^{-(d/2+1)}) over the grid.
std::pair<double, double> chenyan_ratio_scan(int d, const std::vector<double>& xs,
                                             int trunc_n = 4000);

}  // namespace gaussloc
