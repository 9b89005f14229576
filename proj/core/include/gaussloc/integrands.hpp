#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gaussloc/kernels.hpp"
#include "gaussloc/quadrature.hpp"

namespace gaussloc {

/// Pointwise criterion integrands. A return of +infinity marks a point of
/// the singular set; ladder evaluation never calls these there.

/// |R(s,t)|^lambda / detCov(s,t)^(gamma/2).
double integrand_prop(const CovKernel& kernel, double gamma, double lambda,
                      std::span<const double> s, std::span<const double> t);

/// exp(-|y|^2 sigma^2(s,t) / detCov) * detCov^(-d/2).
double integrand_existence(const CovKernel& kernel, std::span<const double> y, int d,
                           std::span<const double> s, std::span<const double> t);

/// R(s,t)^2 / detCov^((d+2)/2); equals integrand_prop with gamma=d+2, lambda=2.
double integrand_smoothness(const CovKernel& kernel, int d,
                            std::span<const double> s, std::span<const double> t);

enum class SelfVariant { J, K };

/// The two pair-of-pairs integrands of the increment field V: variant J is
/// det^(-d/2), variant K weights by the squared covariance.
double integrand_self(const CovKernel& vfield, int d, SelfVariant variant,
                      std::span<const double> p, std::span<const double> q);

// One primitive distance: |x[u] - x[v]| when v >= 0, |x[u]| (distance to
// the zero hyperplane) when v < 0.
struct DistPrim {
    int u;
    int v;
};

// One term of the structured singular distance: the max over its primitives.
struct DistTerm {
    std::vector<DistPrim> prims;
};

// A criterion integral: integrand over a box together with the max-norm
// distance to its singular set, which drives the excision ladder.
// When dist_terms is nonempty it is the structured form of singular_dist
// (the min over terms of the max over primitives); shell integrals then
// decompose exactly into boxes and need no indicator functions.
// cusp_prims lists additional loci where the integrand is finite but not
// smooth (absolute-value cusps of the covariance); quadrature splits
// panels there.
struct CriterionIntegral {
    Integrand f;
    std::function<double(std::span<const double>)> singular_dist;
    Box box;
    std::string name;
    std::vector<DistTerm> dist_terms;
    std::vector<DistPrim> cusp_prims;
};

/// Distance from a parameter point to the kernel's zero-variance set
/// (model-aware: any zero coordinate kills a product kernel, only the lower
/// corner kills the others).
double zero_variance_distance(const CovKernel& kernel, std::span<const double> t);

CriterionIntegral make_prop_criterion(const CovKernel& kernel, double gamma,
                                      double lambda);
CriterionIntegral make_existence_criterion(const CovKernel& kernel,
                                           std::vector<double> y, int d);
CriterionIntegral make_smoothness_criterion(const CovKernel& kernel, int d);

/// `vfield` must come from CovKernel::self_intersection; `base_is_product`
/// adds the shared-zero-coordinate sheet degeneracy to the singular set.
CriterionIntegral make_self_criterion(const CovKernel& vfield, int d,
                                      SelfVariant variant, bool base_is_product);

}  // namespace gaussloc
