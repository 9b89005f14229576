#pragma once

#include <string>
#include <vector>

#include "gaussloc/integrands.hpp"
#include "gaussloc/scenario.hpp"

namespace gaussloc {

enum class LadderLabel { Convergent, Divergent, Inconclusive };

std::string to_string(LadderLabel label);

// Excision ladder diagnosis: integrals over the region at distance >= delta_k
// from the singular set, for a decreasing cutoff sequence. values is
// nondecreasing by construction (shells of a nonnegative integrand are
// accumulated), fitted_exponent is the slope of log(value) vs log(1/delta).
struct DivergenceDiagnosis {
    std::vector<double> cutoffs;
    std::vector<double> values;
    double fitted_exponent = 0.0;
    double r_squared = 0.0;
    LadderLabel label = LadderLabel::Inconclusive;
    bool budget_exceeded = false;
    std::vector<std::size_t> rung_evals;
};

struct LadderConfig {
    int k_min = 3;
    int k_max = 12;                   // cutoffs 2^-k, k = k_min..k_max
    double rel_tol = 1e-4;            // per-cell quadrature tolerance
    std::size_t max_evals = 20'000'000;  // whole-ladder budget
    std::size_t cell_max_evals = 4'000;  // per-cell budget (interior cells)
    double boundary_cell_factor = 1.0;   // stop splitting straddling cells at
                                         // this multiple of the inner cutoff
    double convergence_tol = 0.01;    // last two relative increments below this
    double divergence_slope = 0.05;   // fitted exponent above this
    double fit_r2 = 0.9;              // with at least this fit quality
};

/// Evaluate a criterion integral through the excision ladder.
DivergenceDiagnosis evaluate_criterion(const CriterionIntegral& criterion,
                                       const LadderConfig& config = {});

// Agreement check between the threshold classification and the numerical
// ladder verdicts for the same scenario.
struct DichotomyReport {
    Verdict predicted;
    DivergenceDiagnosis existence;
    DivergenceDiagnosis smoothness;
    bool existence_agrees = false;  // Convergent <-> Yes, Divergent <-> No
    bool smoothness_agrees = false;
    bool conclusive = false;        // neither side Unknown/Inconclusive
};

bool labels_agree(LadderLabel label, Ternary predicted);

/// Parameter rectangles for the two self-intersection arguments: on each
/// separated coordinate a centered gap of relative width sep_eps0, the full
/// interval elsewhere.
void separation_rectangles(const Scenario& scenario, const Domain& base,
                           Domain& i_rect, Domain& j_rect);

/// Run threshold_classify and the ladder on the matching criterion integrals.
/// For localtime the kernel is the field's own covariance; for collision and
/// intersection pass the derived kernel (CovKernel::collision / ::intersection);
/// for self-intersection pass the base kernel, the increment field and its
/// rectangles are built from the scenario's separation class.
DichotomyReport verify_dichotomy(const Scenario& scenario, const CovKernel& kernel,
                                 const LadderConfig& config = {});

}  // namespace gaussloc
