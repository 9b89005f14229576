#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gaussloc/hurst.hpp"

namespace gaussloc {

/// Axis-aligned sub-rectangle of [0,1]^N.
struct Domain {
    std::vector<std::array<double, 2>> bounds;

    static Domain unit_cube(int n);
    /// The cube [lo, 1]^n.
    static Domain cube(int n, double lo);
    int dim() const { return static_cast<int>(bounds.size()); }
    double volume() const;
    /// Cartesian product of two domains.
    Domain product(const Domain& other) const;
};

enum class KernelModel { Fbm, FbSheet, AdditiveFbm, Custom, Derived };

/// Fractional Brownian motion covariance (s,t in [0,1], h in (0,1)).
double cov_fbm(double s, double t, double h);

/// Product-form sheet covariance over matching coordinates.
double cov_fbsheet(std::span<const double> s, std::span<const double> t,
                   const HurstVector& h);

/// Sum of independent one-parameter motions, one per coordinate.
double cov_additive_fbm(std::span<const double> s, std::span<const double> t,
                        const HurstVector& h);

// Covariance function R(s,t) on a rectangle, plus the metadata needed to
// pick singular-set descriptors and serialize run configs.
class CovKernel {
public:
    using Evaluator =
        std::function<double(std::span<const double>, std::span<const double>)>;

    static CovKernel fbm(double h, Domain domain = Domain::unit_cube(1));
    static CovKernel fbsheet(const HurstVector& h);
    static CovKernel additive_fbm(const HurstVector& h);
    static CovKernel custom(int dim, Evaluator eval, Domain domain,
                            std::string name = "custom");

    /// Sum covariance of two independent fields on a common domain.
    static CovKernel collision(const CovKernel& a, const CovKernel& b);
    /// Difference field U(s,t) = A(s) - B(t) on the product parameter set.
    static CovKernel intersection(const CovKernel& a, const CovKernel& b);
    /// Increment field V(s,t) = X(s) - X(t) restricted to I x J.
    static CovKernel self_intersection(const CovKernel& base, const Domain& i_rect,
                                       const Domain& j_rect);

    int dim() const { return dim_; }
    KernelModel model() const { return model_; }
    const Domain& domain() const { return domain_; }
    const std::string& name() const { return name_; }
    /// Hurst data when the model carries it (empty for custom kernels).
    const std::vector<double>& hurst() const { return hurst_; }

    double operator()(std::span<const double> s, std::span<const double> t) const {
        return eval_(s, t);
    }
    /// N=1 convenience.
    double operator()(double s, double t) const {
        return eval_(std::span<const double>(&s, 1), std::span<const double>(&t, 1));
    }

    double variance(std::span<const double> t) const { return eval_(t, t); }

    /// E[(X0(s)-X0(t))^2] = R(s,s) - 2R(s,t) + R(t,t), clamped at 0.
    double increment_variance(std::span<const double> s,
                              std::span<const double> t) const;

private:
    CovKernel(int dim, KernelModel model, Evaluator eval, Domain domain,
              std::string name, std::vector<double> hurst);

    int dim_;
    KernelModel model_;
    Evaluator eval_;
    Domain domain_;
    std::string name_;
    std::vector<double> hurst_;
};

}  // namespace gaussloc
