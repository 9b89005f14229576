#include "gaussloc/integrands.hpp"

#include <cmath>
#include <limits>

namespace gaussloc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double det_cov(const CovKernel& kernel, std::span<const double> s,
               std::span<const double> t) {
    const double rst = kernel(s, t);
    const double det = kernel(s, s) * kernel(t, t) - rst * rst;
    return det < 0.0 ? 0.0 : det;
}

double norm2_sq(std::span<const double> y) {
    double n = 0.0;
    for (double v : y) n += v * v;
    return n;
}

double max_norm_dist(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace

double integrand_prop(const CovKernel& kernel, double gamma, double lambda,
                      std::span<const double> s, std::span<const double> t) {
    const double det = det_cov(kernel, s, t);
    if (det <= 0.0) return kInf;
    const double num = lambda == 0.0 ? 1.0 : std::pow(std::fabs(kernel(s, t)), lambda);
    return num * std::pow(det, -0.5 * gamma);
}

double integrand_existence(const CovKernel& kernel, std::span<const double> y, int d,
                           std::span<const double> s, std::span<const double> t) {
    const double det = det_cov(kernel, s, t);
    const double y2 = norm2_sq(y);
    const double sigma2 = kernel.increment_variance(s, t);
    if (det <= 0.0) return (y2 > 0.0 && sigma2 > 0.0) ? 0.0 : kInf;
    const double damp = y2 > 0.0 ? std::exp(-y2 * sigma2 / det) : 1.0;
    return damp * std::pow(det, -0.5 * d);
}

double integrand_smoothness(const CovKernel& kernel, int d,
                            std::span<const double> s, std::span<const double> t) {
    const double det = det_cov(kernel, s, t);
    if (det <= 0.0) return kInf;
    const double r = kernel(s, t);
    return r * r * std::pow(det, -0.5 * (d + 2));
}

double integrand_self(const CovKernel& vfield, int d, SelfVariant variant,
                      std::span<const double> p, std::span<const double> q) {
    const double det = det_cov(vfield, p, q);
    if (det <= 0.0) return kInf;
    if (variant == SelfVariant::J) return std::pow(det, -0.5 * d);
    const double c = vfield(p, q);
    return c * c * std::pow(det, -0.5 * (d + 2));
}

double zero_variance_distance(const CovKernel& kernel, std::span<const double> t) {
    // Distances are to the kernel's actual zero-variance set (coordinate
    // hyperplanes for a product kernel, the origin otherwise), which need
    // not touch the working rectangle at all.
    if (kernel.model() == KernelModel::FbSheet) {
        // Product form: one vanishing factor is enough.
        double m = kInf;
        for (int j = 0; j < kernel.dim(); ++j) m = std::min(m, t[j]);
        return m;
    }
    double m = 0.0;
    for (int j = 0; j < kernel.dim(); ++j) m = std::max(m, t[j]);
    return m;
}

namespace {

Box pair_box(const Domain& dom) {
    Box b;
    for (int rep = 0; rep < 2; ++rep)
        for (const auto& bd : dom.bounds) {
            b.lo.push_back(bd[0]);
            b.hi.push_back(bd[1]);
        }
    return b;
}

std::function<double(std::span<const double>)> pair_singular_dist(
    const CovKernel& kernel) {
    const int n = kernel.dim();
    return [kernel, n](std::span<const double> x) {
        const auto s = x.first(n), t = x.subspan(n);
        double dist = max_norm_dist(s, t);
        dist = std::min(dist, zero_variance_distance(kernel, s));
        dist = std::min(dist, zero_variance_distance(kernel, t));
        return dist;
    };
}

// Structured form of pair_singular_dist: the diagonal term max_j |s_j - t_j|
// plus the zero-variance terms of both arguments. For a product kernel the
// zero-variance distance is a min over coordinates, which flattens into
// separate single-primitive terms; otherwise it is one max term.
std::vector<DistTerm> pair_dist_terms(const CovKernel& kernel) {
    const int n = kernel.dim();
    std::vector<DistTerm> terms;
    DistTerm diag;
    for (int j = 0; j < n; ++j) diag.prims.push_back({j, n + j});
    terms.push_back(std::move(diag));
    const bool product = kernel.model() == KernelModel::FbSheet;
    for (int arg = 0; arg < 2; ++arg) {
        if (product) {
            for (int j = 0; j < n; ++j) terms.push_back({{{arg * n + j, -1}}});
        } else {
            DistTerm corner;
            for (int j = 0; j < n; ++j) corner.prims.push_back({arg * n + j, -1});
            terms.push_back(std::move(corner));
        }
    }
    return terms;
}

}  // namespace

CriterionIntegral make_prop_criterion(const CovKernel& kernel, double gamma,
                                      double lambda) {
    const int n = kernel.dim();
    return {[kernel, gamma, lambda, n](std::span<const double> x) {
                return integrand_prop(kernel, gamma, lambda, x.first(n), x.subspan(n));
            },
            pair_singular_dist(kernel), pair_box(kernel.domain()),
            "prop(gamma=" + std::to_string(gamma) + ",lambda=" +
                std::to_string(lambda) + ")",
            pair_dist_terms(kernel),
            {}};
}

CriterionIntegral make_existence_criterion(const CovKernel& kernel,
                                           std::vector<double> y, int d) {
    const int n = kernel.dim();
    return {[kernel, y = std::move(y), d, n](std::span<const double> x) {
                return integrand_existence(kernel, y, d, x.first(n), x.subspan(n));
            },
            pair_singular_dist(kernel), pair_box(kernel.domain()), "existence",
            pair_dist_terms(kernel), {}};
}

CriterionIntegral make_smoothness_criterion(const CovKernel& kernel, int d) {
    const int n = kernel.dim();
    return {[kernel, d, n](std::span<const double> x) {
                return integrand_smoothness(kernel, d, x.first(n), x.subspan(n));
            },
            pair_singular_dist(kernel), pair_box(kernel.domain()), "smoothness",
            pair_dist_terms(kernel), {}};
}

CriterionIntegral make_self_criterion(const CovKernel& vfield, int d,
                                      SelfVariant variant, bool base_is_product) {
    const int two_n = vfield.dim();
    const int n = two_n / 2;
    const Domain& dom = vfield.domain();

    if (n == 1 && !base_is_product) {
        // The increment field of a one-parameter base with stationary
        // increments is invariant under a common shift of all four
        // parameters, so the four-dimensional pair-of-pairs integral
        // collapses exactly to three difference coordinates
        //   u0 = t - s,  u1 = s' - s,  u2 = t' - s,
        // weighted by the length of the admissible shift interval.
        const double i0 = dom.bounds[0][0], i1 = dom.bounds[0][1];
        const double j0 = dom.bounds[1][0], j1 = dom.bounds[1][1];
        Box ubox;
        ubox.lo = {j0 - i1, i0 - i1, j0 - i1};
        ubox.hi = {j1 - i0, i1 - i0, j1 - i0};
        auto weight = [i0, i1, j0, j1](std::span<const double> u) {
            const double lo = std::max(std::max(i0, i0 - u[1]),
                                       std::max(j0 - u[0], j0 - u[2]));
            const double hi = std::min(std::min(i1, i1 - u[1]),
                                       std::min(j1 - u[0], j1 - u[2]));
            return hi > lo ? hi - lo : 0.0;
        };
        auto dist = [](std::span<const double> u) {
            return std::min({std::fabs(u[0]), std::fabs(u[1] - u[2]),
                             std::max(std::fabs(u[1]), std::fabs(u[0] - u[2]))});
        };
        std::vector<DistTerm> terms{{{{0, -1}}},
                                    {{{1, 2}}},
                                    {{{1, -1}, {0, 2}}}};
        std::vector<DistPrim> cusps{{0, -1}, {1, -1}, {2, -1},
                                    {0, 1},  {0, 2},  {1, 2}};
        return {[vfield, d, variant, weight](std::span<const double> u) {
                    const double w = weight(u);
                    if (w <= 0.0) return 0.0;
                    const double p[2] = {0.0, u[0]};
                    const double q[2] = {u[1], u[2]};
                    return w * integrand_self(vfield, d, variant,
                                              std::span<const double>(p, 2),
                                              std::span<const double>(q, 2));
                },
                dist, std::move(ubox),
                variant == SelfVariant::J ? "self-J" : "self-K",
                std::move(terms), std::move(cusps)};
    }

    auto dist = [n, base_is_product, dom](std::span<const double> x) {
        const auto p = x.first(static_cast<std::size_t>(2 * n));
        const auto q = x.subspan(static_cast<std::size_t>(2 * n));
        // Degeneracy of V at a single pair: s = t, or (sheet base) a shared
        // zero coordinate; plus the double diagonal p = q.
        auto v_dist = [&](std::span<const double> st) {
            const auto s = st.first(n), t = st.subspan(n);
            double dd = max_norm_dist(s, t);
            if (base_is_product) {
                for (int j = 0; j < n; ++j)
                    dd = std::min(dd, std::max(s[j], t[j]));
            }
            return dd;
        };
        return std::min({v_dist(p), v_dist(q), max_norm_dist(p, q)});
    };

    // Structured form of the same distance: both within-pair diagonals, the
    // double diagonal p = q, and (sheet base) the shared-zero-coordinate
    // terms, all min-combined at the top level.
    std::vector<DistTerm> terms;
    for (int pair = 0; pair < 2; ++pair) {
        const int off = pair * two_n;
        DistTerm diag;
        for (int j = 0; j < n; ++j) diag.prims.push_back({off + j, off + n + j});
        terms.push_back(std::move(diag));
        if (base_is_product)
            for (int j = 0; j < n; ++j)
                terms.push_back({{{off + j, -1}, {off + n + j, -1}}});
    }
    DistTerm ddiag;
    for (int i = 0; i < two_n; ++i) ddiag.prims.push_back({i, two_n + i});
    terms.push_back(std::move(ddiag));

    return {[vfield, d, variant, two_n](std::span<const double> x) {
                return integrand_self(vfield, d, variant, x.first(two_n),
                                      x.subspan(two_n));
            },
            dist, pair_box(dom),
            variant == SelfVariant::J ? "self-J" : "self-K",
            std::move(terms), {}};
}

}  // namespace gaussloc
