#include "gaussloc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gaussloc {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

Json arr(const std::vector<double>& xs) {
    Json a = Json::array();
    for (double x : xs) a.push_back(x);
    return a;
}

}  // namespace

Json to_json(const Scenario& sc) {
    Json j;
    j["scenario"] = to_string(sc.kind);
    j["d"] = sc.d;
    j["H"] = arr(sc.hurst.entries());
    if (sc.hurst_k) j["K"] = arr(sc.hurst_k->entries());
    if (sc.kind == ScenarioKind::LocalTime) j["level"] = arr(sc.level);
    if (sc.kind == ScenarioKind::SelfIntersection) {
        j["sep"] = to_string(sc.separation);
        if (sc.separation == Separation::PartiallySeparated) {
            j["sep_set"] = sc.sep_set;
            j["sep_eps0"] = sc.sep_eps0;
            j["assume_incr_bound"] = sc.assume_incr_bound;
        }
    }
    return j;
}

Json to_json(const Verdict& v) {
    Json j;
    j["exists_l2"] = to_string(v.exists_l2);
    j["smooth_d1"] = to_string(v.smooth_d1);
    j["justification"] = v.justification;
    Json t;
    for (const auto& [k, val] : v.threshold_values) t[k] = val;
    j["threshold_values"] = t;
    return j;
}

Json to_json(const DivergenceDiagnosis& d) {
    Json j;
    j["cutoffs"] = arr(d.cutoffs);
    j["values"] = arr(d.values);
    j["fitted_exponent"] = d.fitted_exponent;
    j["r_squared"] = d.r_squared;
    j["label"] = to_string(d.label);
    j["budget_exceeded"] = d.budget_exceeded;
    j["rung_evals"] = d.rung_evals;
    return j;
}

Json to_json(const DichotomyReport& r) {
    Json j;
    j["predicted"] = to_json(r.predicted);
    j["existence"] = to_json(r.existence);
    j["smoothness"] = to_json(r.smoothness);
    j["existence_agrees"] = r.existence_agrees;
    j["smoothness_agrees"] = r.smoothness_agrees;
    j["conclusive"] = r.conclusive;
    return j;
}

Json to_json(const ConditionReport& r) {
    Json j;
    j["condition"] = to_string(r.condition);
    j["n_pairs_tested"] = r.n_pairs_tested;
    j["best_upper_constant"] = r.best_upper_constant;
    j["best_lower_constant"] = r.best_lower_constant;
    j["n_violations"] = r.violations.size();
    j["passed"] = r.passed;
    return j;
}

Json to_json(const PhiSeries& s) {
    Json j;
    j["terms"] = arr(s.terms);
    j["partial_sums"] = arr(s.partial_sums);
    j["truncation_n"] = s.truncation_n;
    j["tail_estimate"] = s.tail_estimate;
    j["rho_max"] = s.rho_max;
    j["eps"] = s.eps;
    return j;
}

Json to_json(const LEpsEstimate& e) {
    Json j;
    j["value"] = e.value;
    j["standard_error"] = e.standard_error;
    j["replicates"] = e.replicate_values.size();
    j["eps"] = e.eps;
    j["level"] = arr(e.level);
    j["grid_points_per_axis"] = e.grid.points_per_axis;
    j["seed"] = e.seed;
    j["kernel"] = e.kernel_name;
    return j;
}

Json to_json(const ScenarioLocalTimeReport& r) {
    Json j;
    j["config"] = to_json(r.scenario);
    j["kernel"] = r.kernel_name;
    j["eps_ladder"] = arr(r.eps_ladder);
    j["closed_moments"] = arr(r.closed_moments);
    if (!r.mc_estimates.empty()) {
        Json mcs = Json::array();
        for (const auto& e : r.mc_estimates) mcs.push_back(to_json(e));
        j["mc_estimates"] = mcs;
    }
    return j;
}

Json to_json(const Lemma1Result& r) {
    Json j;
    j["integral"] = r.integral;
    j["asymptotic"] = r.asymptotic;
    j["ratio"] = r.ratio;
    return j;
}

Json to_json(const Lemma23Result& r) {
    Json j;
    j["lhs"] = r.lhs;
    j["rhs_bound"] = r.rhs_bound;
    j["constant_estimate"] = r.constant_estimate;
    return j;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string ladder_csv(const DivergenceDiagnosis& d) {
    std::ostringstream os;
    os << "cutoff,value\n";
    for (std::size_t i = 0; i < d.cutoffs.size(); ++i)
        os << format_double(d.cutoffs[i]) << ',' << format_double(d.values[i]) << '\n';
    return os.str();
}

std::string moments_csv(const ScenarioLocalTimeReport& r) {
    std::ostringstream os;
    const bool mc = !r.mc_estimates.empty();
    os << (mc ? "eps,closed_moment,mc_value,mc_se\n" : "eps,closed_moment\n");
    for (std::size_t i = 0; i < r.eps_ladder.size(); ++i) {
        os << format_double(r.eps_ladder[i]) << ','
           << format_double(r.closed_moments[i]);
        if (mc)
            os << ',' << format_double(r.mc_estimates[i].value) << ','
               << format_double(r.mc_estimates[i].standard_error);
        os << '\n';
    }
    return os.str();
}

}  // namespace gaussloc
