#include <algorithm>
#include <cmath>

#include "gaussloc/errors.hpp"
#include "gaussloc/scenario.hpp"

namespace gaussloc {
namespace {

// Clause registry: stable ids for the threshold clauses, so reports do not
// depend on any external numbering.
const char* kLtExistIff = "local-time existence threshold (iff): sum 1/H_j > d";
const char* kLtSmoothIff0 =
    "local-time smoothness threshold at level 0 (iff): sum 1/H_j > d+2";
const char* kLtSmoothSuf =
    "local-time smoothness at nonzero level (sufficient): sum 1/H_j > d+2";
const char* kColExistIff = "collision existence threshold (iff): sum 1/min(H_j,K_j) > d";
const char* kColSmoothIff =
    "collision smoothness threshold (iff): sum 1/min(H_j,K_j) > d+2";
const char* kIntExistIff =
    "intersection existence threshold (iff): sum 1/H_j + sum 1/K_j > d";
const char* kIntSmoothIff =
    "intersection smoothness threshold (iff): sum 1/H_j + sum 1/K_j > d+2";
const char* kWellExistIff =
    "well-separated self-intersection existence (iff): 2 sum 1/H_j > d";
const char* kWellSmoothIff =
    "well-separated self-intersection smoothness (iff): 2 sum 1/H_j > d+2";
const char* kPartExistSuf =
    "partially separated existence (sufficient): 2 sum_S 1/H_j + sum_Sc 1/H_j > d";
const char* kPartExistNec =
    "partially separated non-existence (necessary bound): 2 sum 1/H_j <= d";
const char* kPartSmoothSuf =
    "partially separated smoothness (sufficient): 2 sum_S 1/H_j + sum_Sc 1/H_j > d+2";
const char* kPartSmoothNec =
    "partially separated non-smoothness (necessary bound): 2 sum 1/H_j <= d+2";
const char* kPartIffUpgrade =
    "partially separated thresholds upgraded to iff under the increment-field "
    "conditional-variance upper bound";
const char* kNotExistIff =
    "not-separated self-intersection existence (iff): sum 1/H_j > d";
const char* kNotSmoothSuf =
    "not-separated smoothness (sufficient): sum 1/H_j > d+2";
const char* kNotSmoothNec =
    "not-separated non-smoothness (necessary bound): sum 1/H_j <= max((d+2)/2, 2d/3)";
const char* kNotInL2 = "not in L2, hence not smooth";
const char* kGap = "threshold gap: no clause decides this instance";

Ternary iff(bool strict) { return strict ? Ternary::Yes : Ternary::No; }

}  // namespace

Verdict threshold_classify(const Scenario& sc) {
    sc.validate();
    Verdict v;
    const double d = sc.d;

    switch (sc.kind) {
        case ScenarioKind::LocalTime: {
            const double q = sc.hurst.q_sum();
            v.threshold_values = {{"sum_inv_H", q}, {"d", d}, {"d_plus_2", d + 2}};
            v.exists_l2 = iff(q > d);
            v.justification.push_back(kLtExistIff);
            if (sc.level_is_zero()) {
                v.smooth_d1 = iff(q > d + 2);
                v.justification.push_back(kLtSmoothIff0);
            } else if (q > d + 2) {
                v.smooth_d1 = Ternary::Yes;
                v.justification.push_back(kLtSmoothSuf);
            } else if (v.exists_l2 == Ternary::No) {
                v.smooth_d1 = Ternary::No;
                v.justification.push_back(kNotInL2);
            } else {
                v.smooth_d1 = Ternary::Unknown;
                v.justification.push_back(kGap);
            }
            break;
        }
        case ScenarioKind::Collision: {
            const double q = sc.hurst.min_with(*sc.hurst_k).q_sum();
            v.threshold_values = {{"sum_inv_H", q}, {"d", d}, {"d_plus_2", d + 2}};
            v.exists_l2 = iff(q > d);
            v.smooth_d1 = iff(q > d + 2);
            v.justification = {kColExistIff, kColSmoothIff};
            break;
        }
        case ScenarioKind::Intersection: {
            const double q = sc.hurst.q_sum() + sc.hurst_k->q_sum();
            v.threshold_values = {{"sum_inv_H", q}, {"d", d}, {"d_plus_2", d + 2}};
            v.exists_l2 = iff(q > d);
            v.smooth_d1 = iff(q > d + 2);
            v.justification = {kIntExistIff, kIntSmoothIff};
            break;
        }
        case ScenarioKind::SelfIntersection: {
            const double q = sc.hurst.q_sum();
            switch (sc.separation) {
                case Separation::WellSeparated:
                    v.threshold_values = {{"sum_inv_H", 2 * q}, {"d", d},
                                          {"d_plus_2", d + 2}};
                    v.exists_l2 = iff(2 * q > d);
                    v.smooth_d1 = iff(2 * q > d + 2);
                    v.justification = {kWellExistIff, kWellSmoothIff};
                    break;
                case Separation::PartiallySeparated: {
                    double qs = 0.0;
                    for (int j = 0; j < sc.hurst.dim(); ++j) {
                        const bool in_s = std::find(sc.sep_set.begin(), sc.sep_set.end(),
                                                    j) != sc.sep_set.end();
                        qs += (in_s ? 2.0 : 1.0) / sc.hurst[j];
                    }
                    v.threshold_values = {{"sum_inv_H", qs},
                                          {"full_two_sum_inv_H", 2 * q},
                                          {"d", d},
                                          {"d_plus_2", d + 2}};
                    if (sc.assume_incr_bound) {
                        v.exists_l2 = iff(qs > d);
                        v.smooth_d1 = iff(qs > d + 2);
                        v.justification = {kPartIffUpgrade};
                        break;
                    }
                    if (qs > d) {
                        v.exists_l2 = Ternary::Yes;
                        v.justification.push_back(kPartExistSuf);
                    } else if (2 * q <= d) {
                        v.exists_l2 = Ternary::No;
                        v.justification.push_back(kPartExistNec);
                    } else {
                        v.exists_l2 = Ternary::Unknown;
                        v.justification.push_back(kGap);
                    }
                    if (qs > d + 2) {
                        v.smooth_d1 = Ternary::Yes;
                        v.justification.push_back(kPartSmoothSuf);
                    } else if (2 * q <= d + 2) {
                        v.smooth_d1 = Ternary::No;
                        v.justification.push_back(kPartSmoothNec);
                    } else if (v.exists_l2 == Ternary::No) {
                        v.smooth_d1 = Ternary::No;
                        v.justification.push_back(kNotInL2);
                    } else {
                        v.smooth_d1 = Ternary::Unknown;
                        v.justification.push_back(kGap);
                    }
                    break;
                }
                case Separation::NotSeparated: {
                    const double bound = std::max(0.5 * (d + 2), 2.0 * d / 3.0);
                    v.threshold_values = {{"sum_inv_H", q},
                                          {"d", d},
                                          {"d_plus_2", d + 2},
                                          {"max_bound", bound}};
                    v.exists_l2 = iff(q > d);
                    v.justification.push_back(kNotExistIff);
                    if (q > d + 2) {
                        v.smooth_d1 = Ternary::Yes;
                        v.justification.push_back(kNotSmoothSuf);
                    } else if (q <= bound) {
                        v.smooth_d1 = Ternary::No;
                        v.justification.push_back(kNotSmoothNec);
                    } else if (v.exists_l2 == Ternary::No) {
                        v.smooth_d1 = Ternary::No;
                        v.justification.push_back(kNotInL2);
                    } else {
                        v.smooth_d1 = Ternary::Unknown;
                        v.justification.push_back(kGap);
                    }
                    break;
                }
            }
            break;
        }
    }
    return v;
}

}  // namespace gaussloc
