#pragma once

/*
 * JSON views of the report types.  All exact values are serialized as
 * canonical rational strings; advisory decimal renderings sit alongside
 * under *_decimal keys.  Field names are part of the versioned schema.
 */

#include <nlohmann/json_fwd.hpp>

#include "circlezeros/circle_count.hpp"
#include "circlezeros/parse.hpp"
#include "circlezeros/salem.hpp"
#include "circlezeros/symmetry.hpp"

namespace circlezeros {

nlohmann::json to_json(const CountReport& r);
nlohmann::json to_json(const SymmetryReport& r);
nlohmann::json to_json(const SalemReport& r);
nlohmann::json to_json(const RealInterval& r);
nlohmann::json to_json(const IsolationResult& r);
nlohmann::json to_json(const PolyExpr& input);

// One JSON-lines record of the candidate stream.
nlohmann::json scan_candidate_json(const Polynomial& p, const SalemReport& r);
nlohmann::json to_json(const ScanSummary& s);

}  // namespace circlezeros
