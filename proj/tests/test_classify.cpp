#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "gaussloc/errors.hpp"
#include "gaussloc/scenario.hpp"

using namespace gaussloc;

namespace {

bool cites(const Verdict& v, const std::string& needle) {
    return std::any_of(v.justification.begin(), v.justification.end(),
                       [&](const std::string& s) {
                           return s.find(needle) != std::string::npos;
                       });
}

Scenario localtime(HurstVector h, int d, std::vector<double> level = {}) {
    Scenario sc;
    sc.kind = ScenarioKind::LocalTime;
    sc.hurst = std::move(h);
    sc.d = d;
    sc.level = std::move(level);
    return sc;
}

Scenario self(HurstVector h, int d, Separation sep,
              std::vector<int> sep_set = {}, bool assume = false) {
    Scenario sc;
    sc.kind = ScenarioKind::SelfIntersection;
    sc.hurst = std::move(h);
    sc.d = d;
    sc.separation = sep;
    sc.sep_set = std::move(sep_set);
    sc.assume_incr_bound = assume;
    return sc;
}

}  // namespace

TEST_CASE("plain local-time thresholds") {
    Verdict v = threshold_classify(localtime(HurstVector{0.5}, 1));
    CHECK(v.exists_l2 == Ternary::Yes);   // 2 > 1
    CHECK(v.smooth_d1 == Ternary::No);    // 2 <= 3
    CHECK(cites(v, "sum 1/H_j > d"));
    CHECK(v.threshold_values.at("sum_inv_H") == doctest::Approx(2.0));

    // Equality is a No: the thresholds are strict.
    CHECK(threshold_classify(localtime(HurstVector{0.5}, 2)).exists_l2 == Ternary::No);
    CHECK(threshold_classify(localtime(HurstVector{0.5}, 3)).exists_l2 == Ternary::No);

    v = threshold_classify(localtime(HurstVector{0.25}, 1));
    CHECK(v.exists_l2 == Ternary::Yes);   // 4 > 1
    CHECK(v.smooth_d1 == Ternary::Yes);   // 4 > 3

    // Sheet rows.
    CHECK(threshold_classify(localtime(HurstVector{0.5, 0.5}, 3)).exists_l2 ==
          Ternary::Yes);
    CHECK(threshold_classify(localtime(HurstVector{0.5, 0.5}, 4)).exists_l2 ==
          Ternary::No);
}

TEST_CASE("nonzero level: smoothness clause is one-sided") {
    // In L2 but below the smoothness threshold: the level-0 iff does not
    // apply away from 0, so the verdict is open.
    Verdict v = threshold_classify(localtime(HurstVector{0.5}, 1, {1.0}));
    CHECK(v.exists_l2 == Ternary::Yes);
    CHECK(v.smooth_d1 == Ternary::Unknown);
    CHECK(cites(v, "threshold gap"));

    // Above the threshold the sufficient clause fires.
    v = threshold_classify(localtime(HurstVector{0.25}, 1, {1.0}));
    CHECK(v.smooth_d1 == Ternary::Yes);
    CHECK(cites(v, "sufficient"));

    // Not in L2 at all: cannot be smooth.
    v = threshold_classify(localtime(HurstVector{0.5}, 3, {1.0, 0.0, 0.0}));
    CHECK(v.exists_l2 == Ternary::No);
    CHECK(v.smooth_d1 == Ternary::No);
    CHECK(cites(v, "not in L2"));
}

TEST_CASE("collision thresholds use the coordinate-wise minimum index") {
    Scenario sc;
    sc.kind = ScenarioKind::Collision;
    sc.hurst = HurstVector{0.4};
    sc.hurst_k = HurstVector{0.6};
    sc.d = 2;
    Verdict v = threshold_classify(sc);
    CHECK(v.exists_l2 == Ternary::Yes);  // 1/0.4 = 2.5 > 2
    CHECK(v.smooth_d1 == Ternary::No);   // 2.5 <= 4
    CHECK(v.threshold_values.at("sum_inv_H") == doctest::Approx(2.5));
    CHECK(cites(v, "collision"));

    sc.d = 3;
    CHECK(threshold_classify(sc).exists_l2 == Ternary::No);
}

TEST_CASE("intersection thresholds add the two reciprocal sums") {
    Scenario sc;
    sc.kind = ScenarioKind::Intersection;
    sc.hurst = HurstVector{0.5};
    sc.hurst_k = HurstVector{0.5};
    sc.d = 3;
    Verdict v = threshold_classify(sc);
    CHECK(v.exists_l2 == Ternary::Yes);  // 2 + 2 = 4 > 3
    CHECK(v.smooth_d1 == Ternary::No);
    sc.d = 4;
    CHECK(threshold_classify(sc).exists_l2 == Ternary::No);  // equality
    sc.d = 5;
    CHECK(threshold_classify(sc).exists_l2 == Ternary::No);
}

TEST_CASE("well-separated self-intersection doubles the sum") {
    Verdict v =
        threshold_classify(self(HurstVector{0.25}, 1, Separation::WellSeparated));
    CHECK(v.exists_l2 == Ternary::Yes);  // 8 > 1
    CHECK(v.smooth_d1 == Ternary::Yes);  // 8 > 3
    v = threshold_classify(self(HurstVector{0.9}, 3, Separation::WellSeparated));
    CHECK(v.exists_l2 == Ternary::No);   // 2.22 <= 3
    CHECK(v.smooth_d1 == Ternary::No);
}

TEST_CASE("not-separated self-intersection: iff existence, gap in smoothness") {
    Verdict v = threshold_classify(self(HurstVector{0.25}, 1, Separation::NotSeparated));
    CHECK(v.exists_l2 == Ternary::Yes);  // 4 > 1
    CHECK(v.smooth_d1 == Ternary::Yes);  // 4 > 3

    v = threshold_classify(self(HurstVector{0.9}, 3, Separation::NotSeparated));
    CHECK(v.exists_l2 == Ternary::No);
    CHECK(v.smooth_d1 == Ternary::No);   // 1.11 <= max{2.5, 2}
    CHECK(cites(v, "necessary bound"));
    CHECK(v.threshold_values.at("max_bound") == doctest::Approx(2.5));

    // The documented open case: 3.33 is neither > 4 nor <= max{2, 4/3}.
    v = threshold_classify(self(HurstVector{0.3}, 2, Separation::NotSeparated));
    CHECK(v.exists_l2 == Ternary::Yes);
    CHECK(v.smooth_d1 == Ternary::Unknown);
    CHECK(cites(v, "threshold gap"));
}

TEST_CASE("partially separated self-intersection") {
    const HurstVector h{0.5, 0.5};

    // Sufficient clause: 2/H_1 + 1/H_2 = 6 > 3.
    Verdict v = threshold_classify(self(h, 3, Separation::PartiallySeparated, {0}));
    CHECK(v.exists_l2 == Ternary::Yes);
    CHECK(cites(v, "sufficient"));
    CHECK(v.threshold_values.at("sum_inv_H") == doctest::Approx(6.0));
    CHECK(v.threshold_values.at("full_two_sum_inv_H") == doctest::Approx(8.0));

    // Necessary clause: 2 * 4 = 8 <= 9.
    v = threshold_classify(self(h, 9, Separation::PartiallySeparated, {0}));
    CHECK(v.exists_l2 == Ternary::No);
    CHECK(v.smooth_d1 == Ternary::No);

    // Gap between 6 and 8.
    v = threshold_classify(self(h, 7, Separation::PartiallySeparated, {0}));
    CHECK(v.exists_l2 == Ternary::Unknown);

    // The extra conditional-variance hypothesis upgrades both to iff.
    v = threshold_classify(self(h, 7, Separation::PartiallySeparated, {0}, true));
    CHECK(v.exists_l2 == Ternary::No);   // 6 <= 7
    CHECK(cites(v, "upgraded to iff"));
    v = threshold_classify(self(h, 5, Separation::PartiallySeparated, {0}, true));
    CHECK(v.exists_l2 == Ternary::Yes);  // 6 > 5
}

TEST_CASE("smoothness implies existence on every classified scenario") {
    for (double h : {0.2, 0.35, 0.5, 0.75, 0.9}) {
        for (int d = 1; d <= 6; ++d) {
            for (Separation sep : {Separation::WellSeparated, Separation::NotSeparated}) {
                const Verdict v = threshold_classify(self(HurstVector{h}, d, sep));
                if (v.smooth_d1 == Ternary::Yes) CHECK(v.exists_l2 == Ternary::Yes);
            }
            const Verdict v = threshold_classify(localtime(HurstVector{h}, d));
            if (v.smooth_d1 == Ternary::Yes) CHECK(v.exists_l2 == Ternary::Yes);
        }
    }
}

TEST_CASE("invalid scenarios are rejected") {
    Scenario sc;
    sc.kind = ScenarioKind::Collision;
    sc.hurst = HurstVector{0.5};
    sc.d = 1;
    // Missing second index vector.
    CHECK_THROWS_AS(threshold_classify(sc), InvalidScenarioError);

    // Partial separation needs a nonempty proper subset.
    CHECK_THROWS_AS(
        threshold_classify(self(HurstVector{0.5}, 1, Separation::PartiallySeparated)),
        InvalidScenarioError);
    CHECK_THROWS_AS(threshold_classify(self(HurstVector{0.5, 0.5}, 1,
                                            Separation::PartiallySeparated, {0, 1})),
                    InvalidScenarioError);

    CHECK_THROWS_AS(HurstVector{1.5}, std::domain_error);
}
