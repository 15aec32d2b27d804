#include "invarr/io.hpp"

#include <algorithm>
#include <sstream>

namespace invarr {

nlohmann::ordered_json to_json(const ScanRecord& rec, bool with_timing) {
  nlohmann::ordered_json j;
  j["group"] = rec.group;
  j["index"] = rec.index;
  j["form"] = rec.form;
  j["length"] = rec.length;
  j["abs_length"] = rec.abs_length;
  j["interval"] = rec.interval_size;
  j["nbc"] = rec.nbc_count;
  j["regions"] = rec.region_count;
  j["star"] = rec.star;
  j["distance_cond"] = rec.distance_cond;
  j["regular_bg"] = rec.regular_bg;
  j["has_rhombus"] = rec.has_rhombus;
  if (rec.right_hull_prop) j["right_hull"] = *rec.right_hull_prop;
  if (rec.avoids_patterns) j["avoids_patterns"] = *rec.avoids_patterns;
  if (with_timing) j["timing_ms"] = rec.timing_ms;
  return j;
}

std::string scan_jsonl(const std::vector<ScanRecord>& records,
                       bool with_timing) {
  std::string out;
  for (const auto& rec : records) {
    out += to_json(rec, with_timing).dump();
    out += '\n';
  }
  return out;
}

std::string to_dot(const BruhatGraph& graph) {
  const CoxeterSystem& sys = graph.sys();
  std::ostringstream os;
  os << "digraph bruhat {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t p = 0; p < graph.interval.size(); ++p) {
    const Element& w = graph.member(static_cast<int>(p));
    os << "  n" << graph.interval.members[p] << " [label=\"";
    if (sys.datum().kind == Kind::A)
      os << unrealize(sys, w).str();
    else
      os << graph.interval.members[p];
    os << "\"];\n";
  }
  std::vector<BruhatEdge> edges = graph.edges;
  std::sort(edges.begin(), edges.end(),
            [](const BruhatEdge& a, const BruhatEdge& b) {
              return std::pair(a.from, a.to) < std::pair(b.from, b.to);
            });
  for (const auto& e : edges) {
    int jump = graph.member(e.to).len - graph.member(e.from).len;
    os << "  n" << graph.interval.members[e.from] << " -> n"
       << graph.interval.members[e.to];
    if (jump > 1) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json phi_table_json(const PhiMap& map) {
  const CoxeterSystem& sys = *map.domain.arr.sys;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < map.domain.sets.size(); ++i) {
    nlohmann::ordered_json row;
    row["positions"] = map.domain.sets[i];
    row["image"] = element_form(sys, map.images[i]);
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json out;
  out["word"] = map.domain.arr.word;
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace invarr
