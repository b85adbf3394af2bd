#pragma once

#include <json.hpp>

#include "orbitforge/oracle.hpp"
#include "orbitforge/rational.hpp"

namespace orbitforge {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const PartitionPair& p);
nlohmann::json to_json(const RationalOrbitLabel& lab);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const QuadraticSpace& space);

/// Timing fields are included only on request so that repeated runs give
/// identical output.
nlohmann::json to_json(const OrbitReport& report, bool timing);
nlohmann::json to_json(const ReconcileResult& result, bool timing);

/// Element of GF(2^k) as its bit pattern.
inline int to_json_value(FieldElem e) { return e.bits; }

}  // namespace orbitforge
