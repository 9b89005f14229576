#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gaussloc/kernels.hpp"
#include "gaussloc/scenario.hpp"

namespace gaussloc {

/// Centered Gaussian density (2 pi eps)^(-d/2) exp(-|x|^2 / (2 eps)).
double heat_kernel(std::span<const double> x, double eps, int d);

struct GridSpec {
    int points_per_axis = 64;
    Domain domain = Domain::unit_cube(1);
};

// Monte Carlo estimate of the smoothed occupation integral
// int_I p_eps(X(s) - x) ds as a Riemann sum on sampled field values.
struct LEpsEstimate {
    double value = 0.0;
    std::vector<double> replicate_values;
    double standard_error = 0.0;
    GridSpec grid;
    double eps = 0.0;
    std::vector<double> level;
    std::uint64_t seed = 0;
    std::string kernel_name;
};

LEpsEstimate l_eps_mc(const CovKernel& kernel, int d, std::span<const double> x,
                      double eps, const GridSpec& grid, int replicates,
                      std::uint64_t seed);

/// Second moment of the eps-smoothed local time at level y by pair
/// quadrature of the exact two-point Gaussian density.
double second_moment_closed(const CovKernel& kernel, int d, std::span<const double> y,
                            double eps, std::size_t max_evals = 4'000'000);

/// Mixed second moment E[L_eps1 L_eps2]; equal regularizations reduce to
/// second_moment_closed.
double second_moment_mixed(const CovKernel& kernel, int d, std::span<const double> y,
                           double eps1, double eps2,
                           std::size_t max_evals = 4'000'000);

/// E[(L_eps1 - L_eps2)^2] = A(e1,e1) + A(e2,e2) - 2 A(e1,e2), clamped at 0.
double cauchy_gap(const CovKernel& kernel, int d, std::span<const double> y,
                  double eps1, double eps2, std::size_t max_evals = 4'000'000);

// Scenario dispatch: builds the derived kernel and the separation geometry,
// then reports either the MC estimate or the closed-form moment ladder.
struct ScenarioLocalTimeReport {
    Scenario scenario;
    std::string kernel_name;
    std::vector<double> eps_ladder;
    std::vector<double> closed_moments;     // second_moment_closed per rung
    std::vector<LEpsEstimate> mc_estimates; // empty when estimator = closed form
};

enum class Estimator { ClosedForm, MonteCarlo };

/// Derived covariance for a scenario: the base field itself (localtime), the
/// difference-field kernels (collision/intersection), or the increment field
/// on the separation rectangles (self-intersection).
CovKernel scenario_kernel(const Scenario& scenario);

ScenarioLocalTimeReport scenario_localtime(const Scenario& scenario,
                                           Estimator estimator,
                                           std::vector<double> eps_ladder,
                                           int grid_points, int replicates,
                                           std::uint64_t seed);

}  // namespace gaussloc
