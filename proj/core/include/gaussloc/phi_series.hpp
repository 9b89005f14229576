#pragma once

#include <vector>

#include "gaussloc/kernels.hpp"

namespace gaussloc {

// Truncated chaos-energy series at level 0: term(n) is the weighted squared
// n-th chaos component of the smoothed local time, integrated over the
// parameter rectangle squared.
struct PhiSeries {
    std::vector<double> terms;         // term n = terms[n-1], all nonnegative
    std::vector<double> partial_sums;  // at u = 1, nondecreasing
    int truncation_n = 0;
    double tail_estimate = 0.0;        // geometric bound on the dropped tail
    double rho_max = 0.0;              // max |R(s,t)|/(ab) on the grid
    double eps = 0.0;
};

/// Evaluate the series on a tensor quadrature grid of `grid` points per
/// parameter axis, with variance smoothing a^2 = Var(s) + eps. Throws
/// SingularDomainError when rho_max >= 1 on the grid and NotConvergedError
/// when the geometric tail bound cannot be brought below `tail_tol`.
PhiSeries phi_series(const CovKernel& kernel, int d, double eps, int grid,
                     int trunc_n, double tail_tol = 1e-8);

/// Closed-form resummation cross-check: the grid integral of
/// R^2 / (a^2 b^2 - R^2)^{d/2+1}, comparable to the series total up to the
/// two-sided series-identity band.
double phi_resummation(const CovKernel& kernel, int d, double eps, int grid);

}  // namespace gaussloc
