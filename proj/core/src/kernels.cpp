#include "gaussloc/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace gaussloc {

Domain Domain::unit_cube(int n) {
    Domain d;
    d.bounds.assign(static_cast<std::size_t>(n), {0.0, 1.0});
    return d;
}

Domain Domain::cube(int n, double lo) {
    Domain d;
    d.bounds.assign(static_cast<std::size_t>(n), {lo, 1.0});
    return d;
}

double Domain::volume() const {
    double v = 1.0;
    for (const auto& b : bounds) v *= b[1] - b[0];
    return v;
}

Domain Domain::product(const Domain& other) const {
    Domain d = *this;
    d.bounds.insert(d.bounds.end(), other.bounds.begin(), other.bounds.end());
    return d;
}

double cov_fbm(double s, double t, double h) {
    if (!(h > 0.0 && h < 1.0)) throw std::domain_error("cov_fbm: h must lie in (0,1)");
    const double e = 2.0 * h;
    // Two-sided form: valid for negative arguments as well, which derived
    // kernels evaluated in difference coordinates rely on.
    return 0.5 * (std::pow(std::fabs(s), e) + std::pow(std::fabs(t), e) -
                  std::pow(std::fabs(s - t), e));
}

double cov_fbsheet(std::span<const double> s, std::span<const double> t,
                   const HurstVector& h) {
    if (static_cast<int>(s.size()) != h.dim() || static_cast<int>(t.size()) != h.dim())
        throw std::invalid_argument("cov_fbsheet: dimension mismatch");
    double r = 1.0;
    for (int j = 0; j < h.dim(); ++j) r *= cov_fbm(s[j], t[j], h[j]);
    return r;
}

double cov_additive_fbm(std::span<const double> s, std::span<const double> t,
                        const HurstVector& h) {
    if (static_cast<int>(s.size()) != h.dim() || static_cast<int>(t.size()) != h.dim())
        throw std::invalid_argument("cov_additive_fbm: dimension mismatch");
    double r = 0.0;
    for (int j = 0; j < h.dim(); ++j) r += cov_fbm(s[j], t[j], h[j]);
    return r;
}

CovKernel::CovKernel(int dim, KernelModel model, Evaluator eval, Domain domain,
                     std::string name, std::vector<double> hurst)
    : dim_(dim),
      model_(model),
      eval_(std::move(eval)),
      domain_(std::move(domain)),
      name_(std::move(name)),
      hurst_(std::move(hurst)) {
    if (domain_.dim() != dim_)
        throw std::invalid_argument("CovKernel: domain dimension mismatch");
}

CovKernel CovKernel::fbm(double h, Domain domain) {
    if (!(h > 0.0 && h < 1.0)) throw std::domain_error("CovKernel::fbm: h in (0,1)");
    return CovKernel(
        1, KernelModel::Fbm,
        [h](std::span<const double> s, std::span<const double> t) {
            return cov_fbm(s[0], t[0], h);
        },
        std::move(domain), "fbm", {h});
}

CovKernel CovKernel::fbsheet(const HurstVector& h) {
    return CovKernel(
        h.dim(), KernelModel::FbSheet,
        [h](std::span<const double> s, std::span<const double> t) {
            return cov_fbsheet(s, t, h);
        },
        // Product kernels lose local nondeterminism at the coordinate
        // hyperplanes (the conditional-variance lower bound holds on
        // [a, 1]^N with a > 0 only), so the working rectangle stays away
        // from them. Any a > 0 gives the same convergence verdicts; a
        // generous margin keeps the variance weight well conditioned for
        // the quadrature.
        Domain::cube(h.dim(), 0.5), "fbsheet", h.entries());
}

CovKernel CovKernel::additive_fbm(const HurstVector& h) {
    return CovKernel(
        h.dim(), KernelModel::AdditiveFbm,
        [h](std::span<const double> s, std::span<const double> t) {
            return cov_additive_fbm(s, t, h);
        },
        Domain::unit_cube(h.dim()), "additive_fbm", h.entries());
}

CovKernel CovKernel::custom(int dim, Evaluator eval, Domain domain, std::string name) {
    return CovKernel(dim, KernelModel::Custom, std::move(eval), std::move(domain),
                     std::move(name), {});
}

CovKernel CovKernel::collision(const CovKernel& a, const CovKernel& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("CovKernel::collision: equal N required");
    return CovKernel(
        a.dim(), KernelModel::Derived,
        [a, b](std::span<const double> s, std::span<const double> t) {
            return a(s, t) + b(s, t);
        },
        a.domain(), "collision(" + a.name() + "," + b.name() + ")", {});
}

CovKernel CovKernel::intersection(const CovKernel& a, const CovKernel& b) {
    const int n1 = a.dim();
    const int n2 = b.dim();
    return CovKernel(
        n1 + n2, KernelModel::Derived,
        [a, b, n1](std::span<const double> st, std::span<const double> st2) {
            return a(st.first(n1), st2.first(n1)) + b(st.subspan(n1), st2.subspan(n1));
        },
        a.domain().product(b.domain()),
        "intersection(" + a.name() + "," + b.name() + ")", {});
}

CovKernel CovKernel::self_intersection(const CovKernel& base, const Domain& i_rect,
                                       const Domain& j_rect) {
    const int n = base.dim();
    if (i_rect.dim() != n || j_rect.dim() != n)
        throw std::invalid_argument("CovKernel::self_intersection: rectangle dimension");
    return CovKernel(
        2 * n, KernelModel::Derived,
        [base, n](std::span<const double> p, std::span<const double> q) {
            const auto s = p.first(n), t = p.subspan(n);
            const auto s2 = q.first(n), t2 = q.subspan(n);
            return base(s, s2) - base(s, t2) - base(t, s2) + base(t, t2);
        },
        i_rect.product(j_rect), "self(" + base.name() + ")", {});
}

double CovKernel::increment_variance(std::span<const double> s,
                                     std::span<const double> t) const {
    const double v = eval_(s, s) - 2.0 * eval_(s, t) + eval_(t, t);
    return v < 0.0 ? 0.0 : v;
}

}  // namespace gaussloc
