#include "gaussloc/phi_series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gaussloc/chenyan.hpp"
#include "gaussloc/errors.hpp"

namespace gaussloc {
namespace {

// Tensor midpoint grid over the kernel's rectangle.
void midpoint_grid(const Domain& dom, int grid, std::vector<std::vector<double>>& pts,
                   double& weight) {
    const int n = dom.dim();
    std::size_t total = 1;
    for (int j = 0; j < n; ++j) total *= static_cast<std::size_t>(grid);
    weight = dom.volume() / static_cast<double>(total);
    pts.assign(total, std::vector<double>(n));
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i;
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = rem % grid;
            rem /= grid;
            const double lo = dom.bounds[j][0], hi = dom.bounds[j][1];
            pts[i][j] = lo + (idx + 0.5) * (hi - lo) / grid;
        }
    }
}

}  // namespace

PhiSeries phi_series(const CovKernel& kernel, int d, double eps, int grid,
                     int trunc_n, double tail_tol) {
    if (grid < 1 || trunc_n < 0) throw std::invalid_argument("phi_series: bad grid");
    if (eps < 0.0) throw std::domain_error("phi_series: eps >= 0");

    std::vector<std::vector<double>> pts;
    double w = 0.0;
    midpoint_grid(kernel.domain(), grid, pts, w);
    const std::size_t p = pts.size();

    std::vector<double> var(p);
    for (std::size_t i = 0; i < p; ++i) var[i] = kernel.variance(pts[i]) + eps;

    // rho_ij = R(s_i, s_j)^2 / (a_i^2 b_j^2); base carries the weights and
    // the (a^2 b^2)^(d/2) denominator.
    std::vector<double> rho(p * p), base(p * p);
    PhiSeries out;
    out.eps = eps;
    out.truncation_n = trunc_n;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const double r = kernel(pts[i], pts[j]);
            const double ab2 = var[i] * var[j];
            if (ab2 <= 0.0) throw SingularDomainError("phi_series: zero variance");
            rho[i * p + j] = r * r / ab2;
            base[i * p + j] = w * w * std::pow(ab2, -0.5 * d);
            out.rho_max = std::max(out.rho_max, std::fabs(r) / std::sqrt(ab2));
        }
    if (out.rho_max >= 1.0)
        throw SingularDomainError("phi_series: |R|/(ab) >= 1 on the grid");

    const double norm = std::pow(2.0 * M_PI, -d);
    std::vector<double> powr(rho);  // rho^n, advanced per term
    double coeff = 1.0, sum = 0.0, last_term = 0.0;
    for (int n = 1; n <= trunc_n; ++n) {
        coeff *= (n - 1 + 0.5 * d) / n;  // [x^n](1-x)^{-d/2}
        double inner = 0.0;
        for (std::size_t ij = 0; ij < p * p; ++ij) inner += base[ij] * powr[ij];
        last_term = norm * 2.0 * n * coeff * inner;
        sum += last_term;
        out.terms.push_back(last_term);
        out.partial_sums.push_back(sum);
        if (n < trunc_n)
            for (std::size_t ij = 0; ij < p * p; ++ij) powr[ij] *= rho[ij];
    }

    if (trunc_n > 0) {
        const double r2 = out.rho_max * out.rho_max;
        const double ratio = r2 * (trunc_n + 0.5 * d) / trunc_n;
        if (ratio >= 1.0)
            throw NotConvergedError("phi_series: tail ratio >= 1");
        out.tail_estimate = last_term * ratio / (1.0 - ratio);
        if (out.tail_estimate > tail_tol * std::max(sum, 1.0))
            throw NotConvergedError("phi_series: tail bound above tolerance");
    }
    return out;
}

double phi_resummation(const CovKernel& kernel, int d, double eps, int grid) {
    std::vector<std::vector<double>> pts;
    double w = 0.0;
    midpoint_grid(kernel.domain(), grid, pts, w);
    const std::size_t p = pts.size();
    std::vector<double> var(p);
    for (std::size_t i = 0; i < p; ++i) var[i] = kernel.variance(pts[i]) + eps;
    double sum = 0.0;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const double r = kernel(pts[i], pts[j]);
            const double det = var[i] * var[j] - r * r;
            if (det <= 0.0) throw SingularDomainError("phi_resummation: ab <= |R|");
            sum += w * w * r * r * std::pow(det, -(0.5 * d + 1.0));
        }
    return std::pow(2.0 * M_PI, -d) * sum;
}

}  // namespace gaussloc
