#include "gaussloc/local_time.hpp"

#include <cmath>
#include <stdexcept>

#include "gaussloc/errors.hpp"
#include "gaussloc/gram.hpp"
#include "gaussloc/ladder.hpp"
#include "gaussloc/quadrature.hpp"
#include "gaussloc/rng.hpp"

namespace gaussloc {
namespace {

double norm2_sq(std::span<const double> x) {
    double n = 0.0;
    for (double v : x) n += v * v;
    return n;
}

PointList tensor_grid(const Domain& dom, int per_axis) {
    const int n = dom.dim();
    std::size_t total = 1;
    for (int j = 0; j < n; ++j) total *= static_cast<std::size_t>(per_axis);
    PointList pts(total, std::vector<double>(n));
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i;
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = rem % per_axis;
            rem /= per_axis;
            const double lo = dom.bounds[j][0], hi = dom.bounds[j][1];
            pts[i][j] = lo + (idx + 0.5) * (hi - lo) / per_axis;
        }
    }
    return pts;
}

}  // namespace

double heat_kernel(std::span<const double> x, double eps, int d) {
    if (eps <= 0.0) throw std::domain_error("heat_kernel: eps > 0");
    if (static_cast<int>(x.size()) != d)
        throw std::invalid_argument("heat_kernel: |x| != d");
    return std::pow(2.0 * M_PI * eps, -0.5 * d) * std::exp(-norm2_sq(x) / (2.0 * eps));
}

LEpsEstimate l_eps_mc(const CovKernel& kernel, int d, std::span<const double> x,
                      double eps, const GridSpec& grid, int replicates,
                      std::uint64_t seed) {
    if (replicates < 2) throw std::invalid_argument("l_eps_mc: replicates >= 2");
    const PointList pts = tensor_grid(grid.domain, grid.points_per_axis);
    const double cell = grid.domain.volume() / static_cast<double>(pts.size());
    const GramResult gram = gram_matrix(kernel, pts);
    const auto n = gram.cholesky.rows();

    CounterRng rng(seed);
    LEpsEstimate out;
    out.grid = grid;
    out.eps = eps;
    out.level.assign(x.begin(), x.end());
    out.seed = seed;
    out.kernel_name = kernel.name();
    out.replicate_values.reserve(replicates);

    const double norm = std::pow(2.0 * M_PI * eps, -0.5 * d);
    Eigen::VectorXd z(n);
    Eigen::MatrixXd values(d, n);
    double sum = 0.0, sumsq = 0.0;
    for (int rep = 0; rep < replicates; ++rep) {
        for (int row = 0; row < d; ++row) {
            const std::uint64_t stream = substream(static_cast<std::uint64_t>(rep),
                                                   static_cast<std::uint64_t>(row));
            for (Eigen::Index k = 0; k < n; ++k)
                z(k) = rng.normal(stream, static_cast<std::uint64_t>(k));
            values.row(row) = (gram.cholesky * z).transpose();
        }
        double riemann = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
            double q = 0.0;
            for (int row = 0; row < d; ++row) {
                const double dx = values(row, k) - x[row];
                q += dx * dx;
            }
            riemann += norm * std::exp(-q / (2.0 * eps));
        }
        const double v = riemann * cell;
        out.replicate_values.push_back(v);
        sum += v;
        sumsq += v * v;
    }
    out.value = sum / replicates;
    const double var = std::max(0.0, sumsq / replicates - out.value * out.value);
    out.standard_error = std::sqrt(var / (replicates - 1));
    return out;
}

double second_moment_mixed(const CovKernel& kernel, int d, std::span<const double> y,
                           double eps1, double eps2, std::size_t max_evals) {
    if (eps1 <= 0.0 || eps2 <= 0.0)
        throw std::domain_error("second_moment: eps > 0");
    const int n = kernel.dim();
    const double y2 = norm2_sq(y);

    // Two-point density of (Y0(s), Y0(t)) under the per-coordinate 2x2
    // covariance [[eps1 + R(s,s), R(s,t)], [R(s,t), eps2 + R(t,t)]].
    auto f = [&, n](std::span<const double> x) {
        const auto s = x.first(n), t = x.subspan(n);
        const double a = eps1 + kernel(s, s);
        const double b = eps2 + kernel(t, t);
        const double c = kernel(s, t);
        const double det = a * b - c * c;
        if (det <= 0.0) return 0.0;
        const double q = y2 * (a + b - 2.0 * c) / (2.0 * det);
        return std::pow(2.0 * M_PI, -d) * std::exp(-q) * std::pow(det, -0.5 * d);
    };

    Box box;
    for (int rep = 0; rep < 2; ++rep)
        for (const auto& bd : kernel.domain().bounds) {
            box.lo.push_back(bd[0]);
            box.hi.push_back(bd[1]);
        }
    return integrate(f, box, 1e-7, 1e-14, max_evals).value;
}

double second_moment_closed(const CovKernel& kernel, int d, std::span<const double> y,
                            double eps, std::size_t max_evals) {
    return second_moment_mixed(kernel, d, y, eps, eps, max_evals);
}

double cauchy_gap(const CovKernel& kernel, int d, std::span<const double> y,
                  double eps1, double eps2, std::size_t max_evals) {
    const double a11 = second_moment_mixed(kernel, d, y, eps1, eps1, max_evals);
    const double a22 = second_moment_mixed(kernel, d, y, eps2, eps2, max_evals);
    const double a12 = second_moment_mixed(kernel, d, y, eps1, eps2, max_evals);
    return std::max(0.0, a11 + a22 - 2.0 * a12);
}

CovKernel scenario_kernel(const Scenario& sc) {
    sc.validate();
    auto base_for = [](const HurstVector& h) {
        return h.dim() == 1 ? CovKernel::fbm(h[0]) : CovKernel::fbsheet(h);
    };
    switch (sc.kind) {
        case ScenarioKind::LocalTime:
            return base_for(sc.hurst);
        case ScenarioKind::Collision:
            return CovKernel::collision(base_for(sc.hurst), base_for(*sc.hurst_k));
        case ScenarioKind::Intersection:
            return CovKernel::intersection(base_for(sc.hurst), base_for(*sc.hurst_k));
        case ScenarioKind::SelfIntersection: {
            const CovKernel base = base_for(sc.hurst);
            Domain i_rect, j_rect;
            separation_rectangles(sc, base.domain(), i_rect, j_rect);
            return CovKernel::self_intersection(base, i_rect, j_rect);
        }
    }
    throw InvalidScenarioError("scenario_kernel: unknown kind");
}

ScenarioLocalTimeReport scenario_localtime(const Scenario& sc, Estimator estimator,
                                           std::vector<double> eps_ladder,
                                           int grid_points, int replicates,
                                           std::uint64_t seed) {
    ScenarioLocalTimeReport rep;
    rep.scenario = sc;
    const CovKernel kernel = scenario_kernel(sc);
    rep.kernel_name = kernel.name();
    if (eps_ladder.empty()) eps_ladder = {0.5, 0.1, 0.02, 0.004, 0.0008};
    rep.eps_ladder = eps_ladder;

    std::vector<double> y =
        sc.kind == ScenarioKind::LocalTime ? sc.level : std::vector<double>{};
    y.resize(sc.d, 0.0);

    GridSpec grid;
    grid.points_per_axis = grid_points;
    grid.domain = kernel.domain();
    for (double eps : eps_ladder) {
        rep.closed_moments.push_back(second_moment_closed(kernel, sc.d, y, eps));
        if (estimator == Estimator::MonteCarlo)
            rep.mc_estimates.push_back(
                l_eps_mc(kernel, sc.d, y, eps, grid, replicates, seed));
    }
    return rep;
}

}  // namespace gaussloc
