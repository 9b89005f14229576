#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gaussloc {

struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    int dim() const { return static_cast<int>(lo.size()); }
    double volume() const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evals = 0;
    bool converged = false;
};

using Integrand = std::function<double(std::span<const double>)>;

/// Adaptive Gauss-Kronrod 7-15 on an interval.
QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10, double abs_tol = 1e-14,
                        std::size_t max_evals = 2'000'000);

/// Adaptive cubature over a hyper-rectangle: embedded degree-7/5 rule of
/// Genz-Malik for dim >= 2, Gauss-Kronrod for dim 1. Cells split along the
/// direction of largest fourth difference.
QuadResult integrate(const Integrand& f, const Box& box, double rel_tol = 1e-6,
                     double abs_tol = 1e-12, std::size_t max_evals = 10'000'000);

}  // namespace gaussloc
