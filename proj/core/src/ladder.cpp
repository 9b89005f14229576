#include "gaussloc/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace gaussloc {

std::string to_string(LadderLabel label) {
    switch (label) {
        case LadderLabel::Convergent: return "convergent";
        case LadderLabel::Divergent: return "divergent";
        case LadderLabel::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool labels_agree(LadderLabel label, Ternary predicted) {
    return (label == LadderLabel::Convergent && predicted == Ternary::Yes) ||
           (label == LadderLabel::Divergent && predicted == Ternary::No);
}

namespace {

// Least-squares fit of log(value) against log(1/delta); a clearly positive
// slope with a good fit is the divergence signature.
void fit_loglog(const std::vector<double>& cutoffs, const std::vector<double>& values,
                double& slope, double& r2) {
    // Fit the deepest half of the ladder only: the shallow rungs carry the
    // transient bulk of the integral, which bends the log-log curve even
    // when the tail growth is clean.
    const std::size_t n_rungs = values.size();
    const std::size_t tail = std::max<std::size_t>(5, n_rungs / 2);
    const std::size_t first = n_rungs > tail ? n_rungs - tail : 0;
    std::vector<double> xs, ys;
    for (std::size_t i = first; i < n_rungs; ++i)
        if (values[i] > 0.0 && std::isfinite(values[i])) {
            xs.push_back(std::log(1.0 / cutoffs[i]));
            ys.push_back(std::log(values[i]));
        }
    const std::size_t m = xs.size();
    slope = 0.0;
    r2 = 0.0;
    if (m < 3) return;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        syy += ys[i] * ys[i];
    }
    const double n = static_cast<double>(m);
    const double vxx = sxx - sx * sx / n;
    const double vxy = sxy - sx * sy / n;
    const double vyy = syy - sy * sy / n;
    if (vxx <= 0.0) return;
    slope = vxy / vxx;
    r2 = vyy > 0.0 ? (vxy * vxy) / (vxx * vyy) : 1.0;
}

// Shell integral over { dlo <= singular_dist < dhi } by geometric cell
// decomposition. The singular distances are built from coordinate gaps like
// |s - t|, which move at rate at most 2 when a point moves in the max norm,
// so the center value brackets the whole cell within twice its largest
// half-width; cells fully inside integrate without the indicator, cells
// straddling a shell boundary split until they are small against the shell.
double integrate_shell(const CriterionIntegral& criterion, double dlo, double dhi,
                       const LadderConfig& config, std::size_t& evals,
                       bool& budget_exceeded) {
    struct Cell {
        std::vector<double> lo, hi;
    };
    std::vector<Cell> stack{{criterion.box.lo, criterion.box.hi}};
    const int dim = criterion.box.dim();
    std::vector<double> center(dim);
    double acc = 0.0;

    auto masked = [&](std::span<const double> x) {
        const double dist = criterion.singular_dist(x);
        if (dist < dlo || dist >= dhi) return 0.0;
        const double v = criterion.f(x);
        return std::isfinite(v) ? v : 0.0;
    };
    auto plain = [&](std::span<const double> x) {
        const double v = criterion.f(x);
        return std::isfinite(v) ? v : 0.0;
    };

    while (!stack.empty()) {
        if (evals >= config.max_evals) {
            budget_exceeded = true;
            break;
        }
        Cell cell = std::move(stack.back());
        stack.pop_back();

        double radius = 0.0;
        int widest = 0;
        for (int j = 0; j < dim; ++j) {
            const double half = 0.5 * (cell.hi[j] - cell.lo[j]);
            center[j] = cell.lo[j] + half;
            if (half > radius) {
                radius = half;
                widest = j;
            }
        }
        const double dc = criterion.singular_dist(center);
        const double spread = 2.0 * radius;  // Lipschitz bound on dist change
        ++evals;
        if (dc - spread >= dhi || dc + spread < dlo) continue;

        Box box{cell.lo, cell.hi};
        const bool inside = dc - spread >= dlo && dc + spread < dhi;
        if (inside) {
            QuadResult qr = integrate(plain, box, config.rel_tol, 1e-15,
                                      config.cell_max_evals);
            evals += qr.evals;
            acc += std::max(qr.value, 0.0);
        } else if (2.0 * radius <= config.boundary_cell_factor * dlo) {
            // Straddling but already small against the shell: one embedded
            // rule with the indicator, no refinement (the discontinuity would
            // defeat the error estimate anyway).
            QuadResult qr = integrate(masked, box, 10.0, 1e-15, 1);
            evals += qr.evals;
            acc += std::max(qr.value, 0.0);
        } else {
            Cell left = cell, right = cell;
            const double mid = center[widest];
            left.hi[widest] = mid;
            right.lo[widest] = mid;
            stack.push_back(std::move(left));
            stack.push_back(std::move(right));
        }
    }
    return acc;
}

// Two-dimensional shells by iterated 1-D quadrature: for each fixed first
// coordinate, the shell's cross-section is resolved exactly by the same
// Lipschitz branch-and-bound in the second coordinate. Cost is independent
// of the cutoff scale, which the deep rungs of slowly convergent ladders
// need.
double integrate_shell_2d(const CriterionIntegral& criterion, double dlo, double dhi,
                          const LadderConfig& config, double abs_tol,
                          std::size_t& evals, bool& budget_exceeded) {
    const double t_lo = criterion.box.lo[1], t_hi = criterion.box.hi[1];
    const double tiny = std::max(1e-12, 1e-3 * dlo);
    const double abs_inner = 0.5 * abs_tol;

    auto inner = [&](double s) {
        double x[2] = {s, 0.0};
        auto f_at = [&](double t) {
            x[1] = t;
            ++evals;
            const double v = criterion.f(std::span<const double>(x, 2));
            return std::isfinite(v) ? v : 0.0;
        };
        double acc = 0.0;
        auto dist_at = [&](double t) {
            x[1] = t;
            return criterion.singular_dist(std::span<const double>(x, 2));
        };
        std::vector<std::pair<double, double>> stack{{t_lo, t_hi}};
        while (!stack.empty()) {
            const auto [a, b] = stack.back();
            stack.pop_back();
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            const double g = dist_at(mid);
            if (g - 2.0 * half >= dhi || g + 2.0 * half < dlo) continue;
            if (g - 2.0 * half >= dlo && g + 2.0 * half < dhi) {
                QuadResult qr =
                    integrate_1d(f_at, a, b, 10.0 * config.rel_tol, abs_inner, 450);
                evals += qr.evals;
                acc += std::max(qr.value, 0.0);
            } else if (half < tiny) {
                if (g >= dlo && g < dhi) acc += std::max(f_at(mid), 0.0) * 2.0 * half;
            } else {
                stack.push_back({a, mid});
                stack.push_back({mid, b});
            }
        }
        return acc;
    };

    QuadResult outer = integrate_1d(inner, criterion.box.lo[0], criterion.box.hi[0],
                                    10.0 * config.rel_tol, abs_tol, 900);
    if (evals >= config.max_evals) budget_exceeded = true;
    (void)outer.converged;
    return std::max(outer.value, 0.0);
}

// ---------------------------------------------------------------------------
// Structured shell integration. When the singular distance has the form
// min over terms of max over primitives (|x_u - x_v| or x_u - lo_u), the
// shell { dlo <= dist < dhi } splits exactly into disjoint conjunctions of
// primitive constraints, each integrable by nested adaptive 1-D quadrature
// whose cost does not grow with the cutoff depth.

struct PrimCon {
    DistPrim p;
    bool ge;       // true: primitive >= bound; false: primitive < bound
    double bound;
};

std::vector<std::vector<PrimCon>> shell_conjunctions(
    const std::vector<DistTerm>& terms, double dlo, double dhi) {
    std::vector<std::vector<PrimCon>> out;
    const std::size_t m = terms.size();
    const bool finite_hi = std::isfinite(dhi);
    for (std::size_t r = 0; r < m; ++r) {
        // Disjoint by the first term that dips below dhi: terms before r sit
        // at or above dhi, term r lies in [dlo, dhi), the rest above dlo.
        if (r > 0 && !finite_hi) break;
        std::vector<std::vector<PrimCon>> cases{{}};
        auto add_lt_all = [&](const DistTerm& t, double b) {
            for (auto& c : cases)
                for (auto p : t.prims) c.push_back({p, false, b});
        };
        auto add_max_ge = [&](const DistTerm& t, double b) {
            // {max >= b}, split disjointly by the first primitive above b.
            std::vector<std::vector<PrimCon>> next;
            for (auto& c : cases)
                for (std::size_t j = 0; j < t.prims.size(); ++j) {
                    auto cj = c;
                    for (std::size_t i = 0; i < j; ++i)
                        cj.push_back({t.prims[i], false, b});
                    cj.push_back({t.prims[j], true, b});
                    next.push_back(std::move(cj));
                }
            cases = std::move(next);
        };
        for (std::size_t i = 0; i < m; ++i) {
            if (i < r) {
                add_max_ge(terms[i], dhi);
            } else if (i == r) {
                add_max_ge(terms[i], dlo);
                if (finite_hi) add_lt_all(terms[i], dhi);
            } else {
                add_max_ge(terms[i], dlo);
            }
        }
        for (auto& c : cases) out.push_back(std::move(c));
    }
    return out;
}

using IntervalSet = std::vector<std::pair<double, double>>;

// Keep only the part of `in` outside the open window (wl, wr).
IntervalSet without_window(const IntervalSet& in, double wl, double wr) {
    IntervalSet out;
    for (auto [a, b] : in) {
        if (a < wl) out.push_back({a, std::min(b, wl)});
        if (b > wr) out.push_back({std::max(a, wr), b});
    }
    return out;
}

// Keep only the part of `in` inside the window.
IntervalSet within_window(const IntervalSet& in, double wl, double wr) {
    IntervalSet out;
    for (auto [a, b] : in) {
        const double lo = std::max(a, wl), hi = std::min(b, wr);
        if (hi > lo) out.push_back({lo, hi});
    }
    return out;
}

// Seven-point Gauss-Legendre rule on [-1, 1]; the workhorse of the fixed
// graded product rule below.
constexpr double kG7Node[7] = {-0.9491079123427585, -0.7415311855993945,
                               -0.4058451513773972, 0.0,
                               0.4058451513773972,  0.7415311855993945,
                               0.9491079123427585};
constexpr double kG7Weight[7] = {0.1294849661688697, 0.2797053914892766,
                                 0.3818300505051189, 0.4179591836734694,
                                 0.3818300505051189, 0.2797053914892766,
                                 0.1294849661688697};

double integrate_conjunction(const CriterionIntegral& criterion,
                             const std::vector<PrimCon>& cons, double dlo,
                             const LadderConfig& config, double rel_levels,
                             double abs_tol, std::size_t& evals,
                             bool& budget_exceeded) {
    const int dim = criterion.box.dim();
    std::vector<std::vector<PrimCon>> at(dim);
    for (const auto& c : cons) {
        const int lvl = c.p.v < 0 ? c.p.u : std::max(c.p.u, c.p.v);
        at[lvl].push_back(c);
    }
    std::vector<double> x(dim);
    std::function<double(int, double)> level = [&](int l, double abs_l) -> double {
        if (budget_exceeded) return 0.0;
        IntervalSet allow{{criterion.box.lo[l], criterion.box.hi[l]}};
        for (const auto& c : at[l]) {
            double wl, wr;  // window where the primitive is < bound
            if (c.p.v < 0) {
                wl = -c.bound;
                wr = c.bound;
            } else {
                const double other = x[c.p.u + c.p.v - l];
                wl = other - c.bound;
                wr = other + c.bound;
            }
            allow = c.ge ? without_window(allow, wl, wr)
                         : within_window(allow, wl, wr);
            if (allow.empty()) return 0.0;
        }
        auto g = [&](double t) -> double {
            x[l] = t;
            if (l + 1 == dim) {
                if (evals >= config.max_evals) {
                    budget_exceeded = true;
                    return 0.0;
                }
                ++evals;
                const double v = criterion.f(x);
                return std::isfinite(v) ? std::max(v, 0.0) : 0.0;
            }
            return level(l + 1, 0.5 * abs_l);
        };
        // Above two dimensions the whole nest is a deterministic graded
        // product rule. Within one shell conjunction the integrand is smooth
        // apart from absolute-value cusps at known locations, and it varies
        // over many decades only toward the excision boundaries carved out
        // by the >= constraints; panels split at the cusps and grade
        // geometrically toward those boundaries. Adaptive refinement at
        // inner levels would instead chase its own termination jitter at
        // combinatorial cost.
        const bool fixed_rule = dim > 2;
        if (!fixed_rule) {
            const double rel_l = l == 0 ? rel_levels : config.rel_tol;
            const std::size_t cap = l == 0 ? 900 : 200;
            double acc = 0.0;
            for (auto [a, b] : allow) {
                QuadResult qr = integrate_1d(g, a, b, rel_l, abs_l, cap);
                acc += std::max(qr.value, 0.0);
            }
            return acc;
        }

        // Cusp locations at this level (zeros of any primitive resolved
        // here), and the subset the integrand actually blows up toward:
        // the excision anchors of the >= constraints.
        std::vector<double> kinks;
        auto kink_of = [&](const DistPrim& p, std::vector<double>& out) {
            const int lvl = p.v < 0 ? p.u : std::max(p.u, p.v);
            if (lvl == l) out.push_back(p.v < 0 ? 0.0 : x[std::min(p.u, p.v)]);
        };
        for (const auto& term : criterion.dist_terms)
            for (const auto& p : term.prims) kink_of(p, kinks);
        for (const auto& p : criterion.cusp_prims) kink_of(p, kinks);
        std::vector<double> anchors;
        for (const auto& c : at[l])
            if (c.ge) kink_of(c.p, anchors);

        const double g0 = std::max(dlo, 1e-12);
        double acc = 0.0;
        auto g7_panel = [&](double a, double b) {
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            double s = 0.0;
            for (int i = 0; i < 7; ++i)
                s += kG7Weight[i] * g(mid + half * kG7Node[i]);
            acc += std::max(s * half, 0.0);
        };
        // One end of [a, b] abutting an excision anchor: geometric panels
        // away from the anchor, ratio 4, floored at the shell scale.
        auto graded_left = [&](double a, double b, double anchor) {
            double w = std::max(a - anchor, g0);
            double lo = a;
            while (anchor + 4.0 * w < b) {
                g7_panel(lo, anchor + 4.0 * w);
                lo = anchor + 4.0 * w;
                w *= 4.0;
            }
            g7_panel(lo, b);
        };
        auto graded_right = [&](double a, double b, double anchor) {
            double w = std::max(anchor - b, g0);
            double hi = b;
            while (anchor - 4.0 * w > a) {
                g7_panel(anchor - 4.0 * w, hi);
                hi = anchor - 4.0 * w;
                w *= 4.0;
            }
            g7_panel(a, hi);
        };
        auto piece = [&](double a, double b) {
            const double len = b - a;
            double gapL = std::numeric_limits<double>::infinity();
            double gapR = std::numeric_limits<double>::infinity();
            double ancL = 0.0, ancR = 0.0;
            for (double k : anchors) {
                if (k <= a + 1e-15 && a - k < gapL) { gapL = a - k; ancL = k; }
                if (k >= b - 1e-15 && k - b < gapR) { gapR = k - b; ancR = k; }
            }
            const bool gl = std::max(gapL, g0) * 4.0 < len;
            const bool gr = std::max(gapR, g0) * 4.0 < len;
            if (gl && gr) {
                const double mid = 0.5 * (a + b);
                graded_left(a, mid, ancL);
                graded_right(mid, b, ancR);
            } else if (gl) {
                graded_left(a, b, ancL);
            } else if (gr) {
                graded_right(a, b, ancR);
            } else {
                g7_panel(a, b);
            }
        };
        for (auto [a, b] : allow) {
            std::vector<double> cuts{a};
            for (double k : kinks)
                if (k > a && k < b) cuts.push_back(k);
            cuts.push_back(b);
            std::sort(cuts.begin(), cuts.end());
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                if (cuts[i + 1] > cuts[i]) piece(cuts[i], cuts[i + 1]);
        }
        return acc;
    };
    return level(0, abs_tol);
}

double integrate_shell_structured(const CriterionIntegral& criterion, double dlo,
                                  double dhi, const LadderConfig& config,
                                  double abs_tol, std::size_t& evals,
                                  bool& budget_exceeded) {
    const auto conjunctions = shell_conjunctions(criterion.dist_terms, dlo, dhi);
    const double n_conj =
        static_cast<double>(std::max<std::size_t>(conjunctions.size(), 1));
    auto run = [&](double rel_levels, double abs) {
        double acc = 0.0;
        for (const auto& c : conjunctions) {
            acc += integrate_conjunction(criterion, c, dlo, config, rel_levels,
                                         abs / n_conj, evals, budget_exceeded);
            if (budget_exceeded) break;
        }
        return acc;
    };
    return run(10.0 * config.rel_tol, abs_tol);
}

}  // namespace

DivergenceDiagnosis evaluate_criterion(const CriterionIntegral& criterion,
                                       const LadderConfig& config) {
    DivergenceDiagnosis diag;
    double acc = 0.0;
    std::size_t evals = 0;
    const double top = std::numeric_limits<double>::infinity();
    for (int k = config.k_min; k <= config.k_max; ++k) {
        const double delta = std::ldexp(1.0, -k);
        const double prev_delta =
            k == config.k_min ? top : std::ldexp(1.0, -(k - 1));
        // Deep rungs only need resolving against the accumulated total (the
        // labels compare increments to it), so they get an absolute floor.
        const double abs_tol = k == config.k_min ? 1e-14 : 2e-4 * acc;
        // Criteria carrying the structured distance integrate every shell by
        // the exact conjunction decomposition: its cost does not grow with
        // the rung depth, unlike the geometric cell fallback.
        const bool structured = !criterion.dist_terms.empty();
        if (structured)
            acc += integrate_shell_structured(criterion, delta, prev_delta,
                                              config, abs_tol, evals,
                                              diag.budget_exceeded);
        else if (criterion.box.dim() == 2)
            acc += integrate_shell_2d(criterion, delta, prev_delta, config,
                                      abs_tol, evals, diag.budget_exceeded);
        else
            acc += integrate_shell(criterion, delta, prev_delta, config, evals,
                                   diag.budget_exceeded);
        diag.cutoffs.push_back(delta);
        diag.values.push_back(acc);
        diag.rung_evals.push_back(evals);
        if (diag.budget_exceeded) break;
    }

    fit_loglog(diag.cutoffs, diag.values, diag.fitted_exponent, diag.r_squared);

    const std::size_t n = diag.values.size();
    bool converged = false;
    if (n >= 3 && diag.values[n - 1] > 0.0) {
        const double inc1 =
            (diag.values[n - 1] - diag.values[n - 2]) / diag.values[n - 1];
        const double inc2 =
            (diag.values[n - 2] - diag.values[n - 3]) / diag.values[n - 1];
        converged = inc1 < config.convergence_tol && inc2 < config.convergence_tol;
    }

    if (diag.budget_exceeded)
        diag.label = LadderLabel::Inconclusive;
    else if (converged)
        diag.label = LadderLabel::Convergent;
    else if (diag.fitted_exponent > config.divergence_slope &&
             diag.r_squared > config.fit_r2)
        diag.label = LadderLabel::Divergent;
    else
        diag.label = LadderLabel::Inconclusive;
    return diag;
}

void separation_rectangles(const Scenario& sc, const Domain& base, Domain& i_rect,
                           Domain& j_rect) {
    const int n = base.dim();
    i_rect = base;
    j_rect = base;
    for (int j = 0; j < n; ++j) {
        const bool separated =
            sc.separation == Separation::WellSeparated ||
            (sc.separation == Separation::PartiallySeparated &&
             std::find(sc.sep_set.begin(), sc.sep_set.end(), j) != sc.sep_set.end());
        if (!separated) continue;
        const double lo = base.bounds[j][0], hi = base.bounds[j][1];
        const double mid = 0.5 * (lo + hi), half_gap = 0.5 * sc.sep_eps0 * (hi - lo);
        i_rect.bounds[j] = {lo, mid - half_gap};
        j_rect.bounds[j] = {mid + half_gap, hi};
    }
}

DichotomyReport verify_dichotomy(const Scenario& scenario, const CovKernel& kernel,
                                 const LadderConfig& config) {
    DichotomyReport rep;
    rep.predicted = threshold_classify(scenario);

    CriterionIntegral exist_c, smooth_c;
    if (scenario.kind == ScenarioKind::SelfIntersection) {
        Domain i_rect, j_rect;
        separation_rectangles(scenario, kernel.domain(), i_rect, j_rect);
        const CovKernel vfield = CovKernel::self_intersection(kernel, i_rect, j_rect);
        const bool prod = kernel.model() == KernelModel::FbSheet;
        exist_c = make_self_criterion(vfield, scenario.d, SelfVariant::J, prod);
        smooth_c = make_self_criterion(vfield, scenario.d, SelfVariant::K, prod);
    } else {
        std::vector<double> y = scenario.level;
        y.resize(scenario.d, 0.0);
        exist_c = make_existence_criterion(kernel, y, scenario.d);
        smooth_c = make_smoothness_criterion(kernel, scenario.d);
    }

    rep.existence = evaluate_criterion(exist_c, config);
    rep.smoothness = evaluate_criterion(smooth_c, config);
    rep.existence_agrees = labels_agree(rep.existence.label, rep.predicted.exists_l2);
    rep.smoothness_agrees = labels_agree(rep.smoothness.label, rep.predicted.smooth_d1);
    rep.conclusive = rep.predicted.exists_l2 != Ternary::Unknown &&
                     rep.predicted.smooth_d1 != Ternary::Unknown &&
                     rep.existence.label != LadderLabel::Inconclusive &&
                     rep.smoothness.label != LadderLabel::Inconclusive;
    return rep;
}

}  // namespace gaussloc
