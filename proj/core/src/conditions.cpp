#include "gaussloc/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "gaussloc/errors.hpp"
#include "gaussloc/rng.hpp"

namespace gaussloc {
namespace {

constexpr double kDegenerateFloor = 1e-14;
constexpr double kPositiveFloor = 1e-9;

std::vector<double> map_to(const Domain& dom, const double* unit) {
    std::vector<double> p(dom.bounds.size());
    for (std::size_t j = 0; j < p.size(); ++j)
        p[j] = dom.bounds[j][0] + unit[j] * (dom.bounds[j][1] - dom.bounds[j][0]);
    return p;
}

std::vector<double> corner(const Domain& dom, unsigned mask) {
    std::vector<double> p(dom.bounds.size());
    for (std::size_t j = 0; j < p.size(); ++j)
        p[j] = dom.bounds[j][(mask >> j) & 1u];
    return p;
}

double aniso_gauge(const std::vector<double>& a, const std::vector<double>& b,
                   const HurstVector& h) {
    double r = 0.0;
    for (int j = 0; j < h.dim(); ++j)
        r += std::pow(std::fabs(a[j] - b[j]), 2.0 * h[j]);
    return r;
}

struct Accumulator {
    double max_ratio = 0.0;
    double min_ratio = std::numeric_limits<double>::infinity();
    int used = 0;
    std::vector<PointList> violations;

    void add(double lhs, double rhs, PointList tuple, bool lower_bound_kind) {
        if (rhs < kDegenerateFloor) {
            // Degenerate tuple: both sides vanish together or the tuple
            // certifies nothing. A genuinely positive lhs over a zero bound
            // only matters for upper-bound conditions.
            if (!lower_bound_kind && lhs > kPositiveFloor)
                violations.push_back(std::move(tuple));
            return;
        }
        const double ratio = lhs / rhs;
        if (!std::isfinite(ratio)) {
            violations.push_back(std::move(tuple));
            return;
        }
        max_ratio = std::max(max_ratio, ratio);
        min_ratio = std::min(min_ratio, ratio);
        ++used;
    }
};

}  // namespace

std::string to_string(ConditionTag tag) {
    switch (tag) {
        case ConditionTag::C1: return "C1";
        case ConditionTag::C2: return "C2";
        case ConditionTag::C3: return "C3";
        case ConditionTag::C4: return "C4";
    }
    return "?";
}

ConditionReport check_condition(const CovKernel& kernel, ConditionTag tag,
                                const HurstVector& h, const ConditionCheckPlan& plan) {
    const int n = kernel.dim();
    const Domain& dom = kernel.domain();
    Accumulator acc;

    const bool is_c4 = tag == ConditionTag::C4;
    const int slots = tag == ConditionTag::C1 ? 2
                      : tag == ConditionTag::C2 ? 2
                      : tag == ConditionTag::C3 ? 4
                                                : 4;
    const int base_dim = is_c4 ? plan.i_rect.dim() : n;
    HaltonSequence halton(slots * base_dim);
    std::vector<double> unit(static_cast<std::size_t>(slots) * base_dim);

    // The increment field V(s,t) = X(s) - X(t) on I x J, for the separated
    // conditional-variance bound.
    std::unique_ptr<CovKernel> vfield;
    if (is_c4)
        vfield = std::make_unique<CovKernel>(
            CovKernel::self_intersection(kernel, plan.i_rect, plan.j_rect));

    auto eval_tuple = [&](const std::vector<std::vector<double>>& pts) {
        switch (tag) {
            case ConditionTag::C1: {
                const auto& s = pts[0];
                const auto& t = pts[1];
                acc.add(kernel.increment_variance(s, t), aniso_gauge(s, t, h),
                        {s, t}, false);
                break;
            }
            case ConditionTag::C2: {
                const auto& s = pts[0];
                const auto& t = pts[1];
                double rhs = 0.0;
                for (int j = 0; j < n; ++j)
                    rhs += std::min(std::pow(std::fabs(s[j] - t[j]), 2.0 * h[j]),
                                    std::pow(std::fabs(t[j]), 2.0 * h[j]));
                acc.add(cond_var(kernel, t, {s}), rhs, {s, t}, true);
                break;
            }
            case ConditionTag::C3: {
                const auto& u = pts[0];
                double rhs = 0.0;
                for (int j = 0; j < n; ++j) {
                    double m = std::pow(std::fabs(u[j]), 2.0 * h[j]);  // t^0 = 0
                    for (int k = 1; k <= 3; ++k)
                        m = std::min(m, std::pow(std::fabs(u[j] - pts[k][j]), 2.0 * h[j]));
                    rhs += m;
                }
                acc.add(cond_var(kernel, u, {pts[1], pts[2], pts[3]}), rhs,
                        pts, true);
                break;
            }
            case ConditionTag::C4: {
                // pts = {s, t, s', t'} with s,s' in I and t,t' in J.
                const int nn = plan.i_rect.dim();
                std::vector<double> st(pts[0]), st2(pts[2]);
                st.insert(st.end(), pts[1].begin(), pts[1].end());
                st2.insert(st2.end(), pts[3].begin(), pts[3].end());
                const double lhs = cond_var(*vfield, st, {st2});
                double rhs = 0.0;
                for (int j = 0; j < nn; ++j) {
                    const bool in_s =
                        std::find(plan.sep_set.begin(), plan.sep_set.end(), j) !=
                        plan.sep_set.end();
                    if (in_s)
                        rhs += std::pow(std::fabs(pts[1][j] - pts[3][j]), 2.0 * h[j]) +
                               std::pow(std::fabs(pts[0][j] - pts[2][j]), 2.0 * h[j]);
                    else
                        rhs += std::pow(std::fabs(pts[0][j] - pts[1][j]), 2.0 * h[j]);
                }
                acc.add(lhs, rhs, pts, false);
                break;
            }
        }
    };

    auto slot_domain = [&](int slot) -> const Domain& {
        if (!is_c4) return dom;
        return (slot % 2 == 0) ? plan.i_rect : plan.j_rect;
    };

    for (int i = 0; i < plan.n_tuples; ++i) {
        halton.point(static_cast<std::uint64_t>(i) + plan.seed, unit.data());
        std::vector<std::vector<double>> pts;
        pts.reserve(slots);
        for (int sl = 0; sl < slots; ++sl)
            pts.push_back(map_to(slot_domain(sl), unit.data() + sl * base_dim));
        eval_tuple(pts);
    }

    // Corner cases: pair every corner of the domain with every other corner.
    const unsigned corners = 1u << base_dim;
    if (corners <= 16) {
        for (unsigned a = 0; a < corners; ++a) {
            for (unsigned b = 0; b < corners; ++b) {
                std::vector<std::vector<double>> pts;
                for (int sl = 0; sl < slots; ++sl)
                    pts.push_back(corner(slot_domain(sl), sl % 2 == 0 ? a : b));
                eval_tuple(pts);
            }
        }
    }

    if (acc.used < 100)
        throw InsufficientSamplesError("check_condition: only " +
                                       std::to_string(acc.used) + " usable tuples");

    ConditionReport report;
    report.condition = tag;
    report.n_pairs_tested = acc.used;
    report.best_upper_constant = acc.max_ratio;
    report.best_lower_constant = acc.min_ratio;
    report.violations = std::move(acc.violations);

    const bool lower_kind = tag == ConditionTag::C2 || tag == ConditionTag::C3;
    const double key = lower_kind ? report.best_lower_constant : report.best_upper_constant;
    report.passed = report.violations.empty() && std::isfinite(key) && key > kPositiveFloor;
    return report;
}

}  // namespace gaussloc
