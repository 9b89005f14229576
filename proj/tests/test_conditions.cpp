#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaussloc/conditions.hpp"
#include "gaussloc/errors.hpp"

using namespace gaussloc;

namespace {

ConditionCheckPlan small_plan(int n_tuples = 2000) {
    ConditionCheckPlan plan;
    plan.n_tuples = n_tuples;
    return plan;
}

}  // namespace

TEST_CASE("two-sided increment bound holds for the standard models") {
    const HurstVector h1{0.5};
    const CovKernel bm = CovKernel::fbm(0.5);
    const ConditionReport r = check_condition(bm, ConditionTag::C1, h1, small_plan());
    CHECK(r.passed);
    CHECK(r.violations.empty());
    // E(B_s - B_t)^2 = |s - t| exactly: the ratio is identically 1.
    CHECK(r.best_upper_constant == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.best_lower_constant == doctest::Approx(1.0).epsilon(1e-9));

    const HurstVector h2{0.5, 0.5};
    const CovKernel sheet = CovKernel::fbsheet(h2);
    const ConditionReport rs =
        check_condition(sheet, ConditionTag::C1, h2, small_plan());
    CHECK(rs.passed);
    CHECK(rs.best_upper_constant > 0.0);
    CHECK(rs.best_lower_constant > 0.0);
}

TEST_CASE("conditional-variance lower bound holds for the standard models") {
    const HurstVector h1{0.5};
    const CovKernel bm = CovKernel::fbm(0.5);
    const ConditionReport r = check_condition(bm, ConditionTag::C2, h1, small_plan());
    CHECK(r.passed);
    // Markov: Var(t | s) is |t - s| for s < t and t(s - t)/s for s > t, so
    // the ratio to min{|t - s|, t} is bounded below by exactly 1/2.
    CHECK(r.best_lower_constant >= 0.5 - 1e-6);

    const HurstVector h2{0.5, 0.5};
    const CovKernel sheet = CovKernel::fbsheet(h2);
    const ConditionReport rs =
        check_condition(sheet, ConditionTag::C2, h2, small_plan());
    CHECK(rs.passed);
    CHECK(rs.best_lower_constant > 0.0);
}

TEST_CASE("three-point conditional-variance bound holds for the one-parameter model") {
    const HurstVector h{0.5};
    const CovKernel bm = CovKernel::fbm(0.5);
    const ConditionReport r = check_condition(bm, ConditionTag::C3, h, small_plan());
    CHECK(r.passed);
    CHECK(r.best_lower_constant > 0.0);
}

TEST_CASE("separated increment-field bound holds on disjoint rectangles") {
    const HurstVector h{0.5};
    const CovKernel bm = CovKernel::fbm(0.5);
    ConditionCheckPlan plan = small_plan(1000);
    plan.sep_set = {0};
    plan.i_rect.bounds = {{0.0, 0.4}};
    plan.j_rect.bounds = {{0.6, 1.0}};
    const ConditionReport r = check_condition(bm, ConditionTag::C4, h, plan);
    CHECK(r.passed);
    CHECK(r.best_upper_constant > 0.0);
    CHECK(r.best_upper_constant < 1e6);
}

TEST_CASE("degenerate kernel fails the lower-bound condition") {
    const CovKernel flat = CovKernel::custom(
        1,
        [](std::span<const double>, std::span<const double>) { return 1.0; },
        Domain::unit_cube(1), "constant");
    const ConditionReport r =
        check_condition(flat, ConditionTag::C2, HurstVector{0.5}, small_plan());
    CHECK_FALSE(r.passed);
}

TEST_CASE("too few usable tuples raises") {
    const CovKernel bm = CovKernel::fbm(0.5);
    CHECK_THROWS_AS(
        check_condition(bm, ConditionTag::C2, HurstVector{0.5}, small_plan(10)),
        InsufficientSamplesError);
}
