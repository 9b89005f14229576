#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "gaussloc/conditions.hpp"
#include "gaussloc/ladder.hpp"
#include "gaussloc/lemmas.hpp"
#include "gaussloc/local_time.hpp"
#include "gaussloc/phi_series.hpp"
#include "gaussloc/scenario.hpp"

namespace gaussloc {

// Ordered-key JSON records: the serialization is byte-stable for a fixed
// input, which is what the determinism contract of the CLI rests on.
using Json = nlohmann::ordered_json;

Json to_json(const Scenario& scenario);
Json to_json(const Verdict& verdict);
Json to_json(const DivergenceDiagnosis& diag);
Json to_json(const DichotomyReport& report);
Json to_json(const ConditionReport& report);
Json to_json(const PhiSeries& series);
Json to_json(const LEpsEstimate& estimate);
Json to_json(const ScenarioLocalTimeReport& report);
Json to_json(const Lemma1Result& result);
Json to_json(const Lemma23Result& result);

/// Serialize with a fixed layout: 2-space indent, '\n' line ends, trailing
/// newline. Byte-identical for equal documents.
std::string render_json(const Json& doc);

/// CSV table of a ladder: cutoff,value rows with a header.
std::string ladder_csv(const DivergenceDiagnosis& diag);

/// CSV of an epsilon ladder with closed-form moments and optional MC columns.
std::string moments_csv(const ScenarioLocalTimeReport& report);

std::string format_double(double v);

}  // namespace gaussloc
