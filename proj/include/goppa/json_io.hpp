#pragma once

// Stable JSON encodings for every value the CLI reads or writes.  Key order
// is fixed (ordered_json) so identical invocations emit identical bytes.

#include <goppa/analytics.hpp>
#include <goppa/audits.hpp>

#include <nlohmann/json.hpp>

namespace goppa {

using json = nlohmann::ordered_json;

json element_to_json(const FieldElement& e);
FieldElement element_from_json(const Field& f, const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json code_to_json(const LinearCode& c);
LinearCode code_from_json(const json& j);

json level_to_json(const LevelStructure& g);
LevelStructure level_from_json(const json& j);

json raw_level_to_json(const RawLevelStructure& raw);
RawLevelStructure raw_level_from_json(const json& j);

json pluecker_to_json(const PlueckerVector& v);

json parameter_report_to_json(const ParameterReport& r);

json audit_report_to_json(const AuditReport& r);
json selfdual_report_to_json(const SelfDualReport& r);
json delsarte_report_to_json(const DelsarteReport& r);
json conformance_report_to_json(const ConformanceReport& r);

}  // namespace goppa
