#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaussloc/hurst.hpp"

namespace gaussloc {

enum class ScenarioKind { LocalTime, Collision, Intersection, SelfIntersection };
enum class Separation { WellSeparated, PartiallySeparated, NotSeparated };

struct Scenario {
    ScenarioKind kind = ScenarioKind::LocalTime;
    int d = 1;
    HurstVector hurst{0.5};

    // Local time only: the level.
    std::vector<double> level;

    // Collision / intersection: the second field's index.
    std::optional<HurstVector> hurst_k;

    // Self-intersection only.
    Separation separation = Separation::NotSeparated;
    std::vector<int> sep_set;       // S, for the partially separated class
    double sep_eps0 = 0.2;          // guaranteed coordinate gap on S
    bool assume_incr_bound = false; // the increment-field upper bound that
                                    // upgrades the partial case to an iff

    /// Throws InvalidScenarioError when fields are inconsistent.
    void validate() const;

    bool level_is_zero() const;
};

enum class Ternary { Yes, No, Unknown };

std::string to_string(Ternary v);
std::string to_string(ScenarioKind k);
std::string to_string(Separation s);

struct Verdict {
    Ternary exists_l2 = Ternary::Unknown;
    Ternary smooth_d1 = Ternary::Unknown;
    std::vector<std::string> justification;
    std::map<std::string, double> threshold_values;
};

/// Classify a scenario by the strict-inequality thresholds. Iff-clauses give
/// Yes/No; sufficiency-only clauses give Yes or Unknown, with the one-sided
/// necessary bounds turning some Unknowns into No.
Verdict threshold_classify(const Scenario& scenario);

}  // namespace gaussloc
