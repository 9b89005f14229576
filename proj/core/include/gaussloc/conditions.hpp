#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussloc/gram.hpp"
#include "gaussloc/hurst.hpp"
#include "gaussloc/kernels.hpp"

namespace gaussloc {

enum class ConditionTag { C1, C2, C3, C4 };

std::string to_string(ConditionTag tag);

struct ConditionReport {
    ConditionTag condition = ConditionTag::C1;
    int n_pairs_tested = 0;
    double best_upper_constant = 0.0;  // max lhs/rhs over the sample
    double best_lower_constant = 0.0;  // min lhs/rhs over the sample
    std::vector<PointList> violations;
    bool passed = false;
};

struct ConditionCheckPlan {
    int n_tuples = 10000;
    std::uint64_t seed = 0;
    // Separation data for the increment-field condition: index set S and the
    // two rectangles. Ignored by the other conditions.
    std::vector<int> sep_set;
    Domain i_rect;
    Domain j_rect;
};

/// Empirical certification of a nondeterminism condition on sampled tuples
/// (quasi-random points plus the corner cases of the domain). The constants
/// reported are estimates over the sample, not proofs.
ConditionReport check_condition(const CovKernel& kernel, ConditionTag tag,
                                const HurstVector& h, const ConditionCheckPlan& plan);

}  // namespace gaussloc
