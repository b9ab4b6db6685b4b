#pragma once
// JSON form of complexes:
//   {"degrees":[lo,hi], "dims":[...], "boundaries":{"k":[[0,1],...]}, "labels":{"k":[...]}}
// Periodic complexes wrap a block: {"period_shift":P, "block":{...}, "linking":[[...]]}.

#include <json.hpp>

#include "rfhkit/z2/periodic_complex.hpp"

namespace rfh::z2 {

nlohmann::json to_json(const GradedComplexZ2& c);
GradedComplexZ2 complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PeriodicComplexZ2& c);
PeriodicComplexZ2 periodic_from_json(const nlohmann::json& j);

nlohmann::json dims_to_json(const DegreeDims& d);

}  // namespace rfh::z2
