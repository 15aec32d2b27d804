#pragma once

// Serialization: JSON-lines scan records and DOT graphs.  Output is byte
// stable: keys keep insertion order, vertices and edges are emitted in
// canonical order, and timings are only included on request.

#include <string>

#include <json.hpp>

#include "invarr/arrangement.hpp"
#include "invarr/bruhat.hpp"
#include "invarr/scan.hpp"

namespace invarr {

nlohmann::ordered_json to_json(const ScanRecord& rec, bool with_timing = false);
std::string scan_jsonl(const std::vector<ScanRecord>& records,
                       bool with_timing = false);

// bg(w) in DOT: vertices labeled by one-line notation in type A and by
// canonical index otherwise; covering edges solid, non-covering dashed.
std::string to_dot(const BruhatGraph& graph);

nlohmann::ordered_json phi_table_json(const PhiMap& map);

}  // namespace invarr
