#include "gaussloc/scenario.hpp"

#include <algorithm>

#include "gaussloc/errors.hpp"

namespace gaussloc {

void Scenario::validate() const {
    if (d < 1) throw InvalidScenarioError("scenario: d must be >= 1");
    switch (kind) {
        case ScenarioKind::LocalTime:
            if (!level.empty() && static_cast<int>(level.size()) != d)
                throw InvalidScenarioError("scenario: level dimension != d");
            break;
        case ScenarioKind::Collision:
            if (!hurst_k)
                throw InvalidScenarioError("scenario: collision needs a second index");
            if (hurst_k->dim() != hurst.dim())
                throw InvalidScenarioError("scenario: collision requires equal N");
            break;
        case ScenarioKind::Intersection:
            if (!hurst_k)
                throw InvalidScenarioError("scenario: intersection needs a second index");
            break;
        case ScenarioKind::SelfIntersection: {
            const int n = hurst.dim();
            if (separation == Separation::PartiallySeparated) {
                if (sep_set.empty() || static_cast<int>(sep_set.size()) >= n)
                    throw InvalidScenarioError(
                        "scenario: partial separation needs a nonempty proper subset");
                for (int j : sep_set)
                    if (j < 0 || j >= n)
                        throw InvalidScenarioError("scenario: separation index out of range");
                if (!(sep_eps0 > 0.0))
                    throw InvalidScenarioError("scenario: separation gap must be positive");
            }
            break;
        }
    }
}

bool Scenario::level_is_zero() const {
    return std::all_of(level.begin(), level.end(), [](double x) { return x == 0.0; });
}

std::string to_string(Ternary v) {
    switch (v) {
        case Ternary::Yes: return "yes";
        case Ternary::No: return "no";
        case Ternary::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::LocalTime: return "localtime";
        case ScenarioKind::Collision: return "collision";
        case ScenarioKind::Intersection: return "intersection";
        case ScenarioKind::SelfIntersection: return "self";
    }
    return "?";
}

std::string to_string(Separation s) {
    switch (s) {
        case Separation::WellSeparated: return "well";
        case Separation::PartiallySeparated: return "partial";
        case Separation::NotSeparated: return "none";
    }
    return "?";
}

}  // namespace gaussloc
