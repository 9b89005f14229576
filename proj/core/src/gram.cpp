#include "gaussloc/gram.hpp"

#include <cmath>
#include <stdexcept>

#include "gaussloc/errors.hpp"
#include "gaussloc/rng.hpp"

namespace gaussloc {
namespace {

Eigen::MatrixXd kernel_gram(const CovKernel& kernel, const PointList& points) {
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double v = kernel(points[i], points[j]);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

}  // namespace

GramResult gram_matrix(const CovKernel& kernel, const PointList& points,
                       double jitter) {
    if (jitter < 0.0) throw std::invalid_argument("gram_matrix: jitter < 0");
    const Eigen::MatrixXd base = kernel_gram(kernel, points);
    const auto n = base.rows();

    double j = jitter;
    while (true) {
        Eigen::MatrixXd m = base;
        m.diagonal().array() += j;
        Eigen::LLT<Eigen::MatrixXd> llt(m);
        if (llt.info() == Eigen::Success)
            return {std::move(m), llt.matrixL(), j};
        if (j >= 1e-6)
            throw NotPsdError("gram_matrix: not positive semidefinite at jitter " +
                              std::to_string(j));
        j = (j == 0.0) ? 1e-12 : j * 10.0;
    }
    (void)n;
}

FieldSample sample_field(const CovKernel& kernel, const PointList& points, int d,
                         std::uint64_t seed, std::uint64_t replicate) {
    const GramResult gram = gram_matrix(kernel, points);
    const auto n = gram.cholesky.rows();

    CounterRng rng(seed);
    FieldSample out;
    out.points = points;
    out.seed = seed;
    out.kernel_name = kernel.name();
    out.values.resize(d, n);
    Eigen::VectorXd z(n);
    for (int row = 0; row < d; ++row) {
        const std::uint64_t stream = substream(replicate, static_cast<std::uint64_t>(row));
        for (Eigen::Index k = 0; k < n; ++k)
            z(k) = rng.normal(stream, static_cast<std::uint64_t>(k));
        out.values.row(row) = (gram.cholesky * z).transpose();
    }
    return out;
}

double cond_var(const CovKernel& kernel, const std::vector<double>& t,
                const PointList& given) {
    const double var_t = kernel(t, t);
    if (given.empty()) return var_t;

    const auto n = static_cast<Eigen::Index>(given.size());
    Eigen::MatrixXd g = kernel_gram(kernel, given);
    Eigen::VectorXd r(n);
    for (Eigen::Index i = 0; i < n; ++i) r(i) = kernel(t, given[i]);

    // LDLT tolerates the semidefinite Gram matrices that arise when a
    // conditioning point has zero variance (e.g. the origin).
    Eigen::LDLT<Eigen::MatrixXd> ldlt(g);
    if (ldlt.info() != Eigen::Success)
        throw NotPsdError("cond_var: conditioning Gram matrix is not PSD");
    const double v = var_t - r.dot(ldlt.solve(r));

    if (v < 0.0) {
        if (-v <= 1e-12 * std::max(var_t, 1.0) + 1e-14) return 0.0;
        throw std::runtime_error("cond_var: negative conditional variance " +
                                 std::to_string(v));
    }
    return v;
}

double det_cov_pair(const CovKernel& kernel, const std::vector<double>& s,
                    const std::vector<double>& t) {
    const double rst = kernel(s, t);
    const double det = kernel(s, s) * kernel(t, t) - rst * rst;
    return det < 0.0 ? 0.0 : det;
}

}  // namespace gaussloc
