#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gaussloc/kernels.hpp"

namespace gaussloc {

using PointList = std::vector<std::vector<double>>;

struct GramResult {
    Eigen::MatrixXd matrix;      // R(p_i,p_j) + jitter on the diagonal
    Eigen::MatrixXd cholesky;    // lower factor of `matrix`
    double jitter_used = 0.0;
};

// Jitter escalates from `jitter` (or 1e-12 when that fails) by factors of 10
// up to 1e-6; beyond that the kernel is declared not positive semidefinite.
GramResult gram_matrix(const CovKernel& kernel, const PointList& points,
                       double jitter = 0.0);

struct FieldSample {
    PointList points;
    Eigen::MatrixXd values;  // d rows, one column per point
    std::uint64_t seed = 0;
    std::string kernel_name;
};

/// Draw the d coordinate rows of the field at `points`, with independent
/// counter-based substreams per row. `replicate` offsets the substream so
/// Monte Carlo replicates are reproducible individually.
FieldSample sample_field(const CovKernel& kernel, const PointList& points, int d,
                         std::uint64_t seed, std::uint64_t replicate = 0);

/// Conditional variance Var(X0(t) | X0 at `given`) via the Schur complement.
double cond_var(const CovKernel& kernel, const std::vector<double>& t,
                const PointList& given);

/// detCov(X0(s), X0(t)) = R(s,s)R(t,t) - R(s,t)^2, clamped at 0.
double det_cov_pair(const CovKernel& kernel, const std::vector<double>& s,
                    const std::vector<double>& t);

}  // namespace gaussloc
