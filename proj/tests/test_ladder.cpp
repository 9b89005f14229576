#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaussloc/integrands.hpp"
#include "gaussloc/ladder.hpp"

using namespace gaussloc;

namespace {

void check_monotone(const DivergenceDiagnosis& diag) {
    REQUIRE(!diag.values.empty());
    for (std::size_t i = 1; i < diag.values.size(); ++i) {
        CHECK(diag.values[i] >= diag.values[i - 1] - 1e-12);
        CHECK(diag.cutoffs[i] < diag.cutoffs[i - 1]);
    }
    for (std::size_t i = 1; i < diag.rung_evals.size(); ++i)
        CHECK(diag.rung_evals[i] >= diag.rung_evals[i - 1]);
}

}  // namespace

TEST_CASE("pointwise integrand oracles") {
    const CovKernel bm = CovKernel::fbm(0.5);
    const std::vector<double> s{0.25}, t{1.0};
    const std::vector<double> y0{0.0}, y2{2.0};
    // det = 0.25 * 1 - 0.25^2 = 0.1875.
    CHECK(integrand_prop(bm, 1.0, 0.0, s, t) ==
          doctest::Approx(std::pow(0.1875, -0.5)).epsilon(1e-12));
    CHECK(integrand_existence(bm, y0, 1, s, t) ==
          doctest::Approx(std::pow(0.1875, -0.5)).epsilon(1e-12));
    CHECK(integrand_smoothness(bm, 1, s, t) ==
          doctest::Approx(0.0625 * std::pow(0.1875, -1.5)).epsilon(1e-12));
    // Definitional identity.
    CHECK(integrand_smoothness(bm, 2, s, t) ==
          doctest::Approx(integrand_prop(bm, 4.0, 2.0, s, t)));
    // Damping at a nonzero level.
    CHECK(integrand_existence(bm, y2, 1, s, t) <
          integrand_existence(bm, y0, 1, s, t));
    // Singular marker on the diagonal.
    CHECK(std::isinf(integrand_prop(bm, 1.0, 0.0, t, t)));
    // Symmetry under argument swap.
    CHECK(integrand_smoothness(bm, 1, s, t) ==
          doctest::Approx(integrand_smoothness(bm, 1, t, s)));
}

TEST_CASE("pair-of-pairs integrand against direct covariance algebra") {
    const CovKernel base = CovKernel::fbm(0.5);
    const CovKernel v = CovKernel::self_intersection(base, Domain::unit_cube(1),
                                                     Domain::unit_cube(1));
    const std::vector<double> p{0.2, 0.6}, q{0.4, 1.0};
    // Var V(0.2,0.6), Var V(0.4,1.0), Cov by the four-term expansion.
    const double var_p = 0.4, var_q = 0.6;
    const double cov = cov_fbm(0.2, 0.4, 0.5) - cov_fbm(0.2, 1.0, 0.5) -
                       cov_fbm(0.6, 0.4, 0.5) + cov_fbm(0.6, 1.0, 0.5);
    const double det = var_p * var_q - cov * cov;
    CHECK(integrand_self(v, 1, SelfVariant::J, p, q) ==
          doctest::Approx(std::pow(det, -0.5)).epsilon(1e-10));
    CHECK(integrand_self(v, 1, SelfVariant::K, p, q) ==
          doctest::Approx(cov * cov * std::pow(det, -1.5)).epsilon(1e-10));
    // Identical pairs are singular.
    CHECK(std::isinf(integrand_self(v, 1, SelfVariant::J, p, p)));
}

TEST_CASE("label agreement table") {
    CHECK(labels_agree(LadderLabel::Convergent, Ternary::Yes));
    CHECK(labels_agree(LadderLabel::Divergent, Ternary::No));
    CHECK_FALSE(labels_agree(LadderLabel::Convergent, Ternary::No));
    CHECK_FALSE(labels_agree(LadderLabel::Divergent, Ternary::Yes));
    CHECK_FALSE(labels_agree(LadderLabel::Inconclusive, Ternary::Yes));
}

TEST_CASE("ladder separates convergent from divergent pair integrals") {
    const CovKernel bm = CovKernel::fbm(0.5);
    LadderConfig cfg;
    cfg.k_max = 16;

    SUBCASE("convergent: reciprocal sum above the exponent") {
        const auto diag = evaluate_criterion(make_existence_criterion(bm, {0.0}, 1), cfg);
        check_monotone(diag);
        CHECK(diag.label == LadderLabel::Convergent);
        CHECK_FALSE(diag.budget_exceeded);
    }

    SUBCASE("divergent: reciprocal sum below the exponent") {
        const auto diag = evaluate_criterion(make_existence_criterion(bm, {0.0, 0.0, 0.0}, 3), cfg);
        check_monotone(diag);
        CHECK(diag.label == LadderLabel::Divergent);
        CHECK(diag.fitted_exponent > 0.05);
        CHECK(diag.r_squared > 0.9);
    }

    SUBCASE("divergent at the boundary exponent") {
        const auto diag = evaluate_criterion(make_prop_criterion(bm, 2.0, 0.0), cfg);
        CHECK(diag.label == LadderLabel::Divergent);
    }

    SUBCASE("convergent below the boundary exponent") {
        // The tail shrinks only like delta^{0.4} here, so the ladder needs a
        // few extra rungs before the increments drop below the 1% gate.
        LadderConfig deep = cfg;
        deep.k_max = 20;
        const auto diag = evaluate_criterion(make_prop_criterion(bm, 1.2, 0.0), deep);
        CHECK(diag.label == LadderLabel::Convergent);
    }
}

TEST_CASE("exhausted budget yields an inconclusive partial ladder") {
    const CovKernel bm = CovKernel::fbm(0.5);
    LadderConfig cfg;
    cfg.k_max = 12;
    cfg.max_evals = 50;
    const auto diag = evaluate_criterion(make_existence_criterion(bm, {0.0}, 1), cfg);
    CHECK(diag.budget_exceeded);
    CHECK(diag.label == LadderLabel::Inconclusive);
}

TEST_CASE("separation rectangles by class") {
    const Domain base = Domain::unit_cube(2);
    Scenario sc;
    sc.kind = ScenarioKind::SelfIntersection;
    sc.hurst = HurstVector{0.5, 0.5};
    sc.d = 1;

    Domain i_rect, j_rect;
    sc.separation = Separation::NotSeparated;
    separation_rectangles(sc, base, i_rect, j_rect);
    CHECK(i_rect.bounds == base.bounds);
    CHECK(j_rect.bounds == base.bounds);

    sc.separation = Separation::WellSeparated;
    separation_rectangles(sc, base, i_rect, j_rect);
    for (int j = 0; j < 2; ++j) CHECK(i_rect.bounds[j][1] < j_rect.bounds[j][0]);

    sc.separation = Separation::PartiallySeparated;
    sc.sep_set = {0};
    separation_rectangles(sc, base, i_rect, j_rect);
    CHECK(i_rect.bounds[0][1] < j_rect.bounds[0][0]);  // separated coordinate
    CHECK(i_rect.bounds[1] == j_rect.bounds[1]);       // shared coordinate
}

TEST_CASE("threshold verdict and ladder agree on a small dichotomy") {
    Scenario sc;
    sc.kind = ScenarioKind::LocalTime;
    sc.hurst = HurstVector{0.5};
    sc.d = 1;
    LadderConfig cfg;
    cfg.k_max = 16;
    const DichotomyReport rep = verify_dichotomy(sc, CovKernel::fbm(0.5), cfg);
    CHECK(rep.predicted.exists_l2 == Ternary::Yes);
    CHECK(rep.predicted.smooth_d1 == Ternary::No);
    CHECK(rep.existence_agrees);
    CHECK(rep.smoothness_agrees);
    CHECK(rep.conclusive);
}
