#include "orbitforge/json_io.hpp"

#include <bit>

namespace orbitforge {

using nlohmann::json;

json to_json(const PartitionPair& p) { return {{"alpha", p.alpha}, {"beta", p.beta}}; }

json to_json(const RationalOrbitLabel& lab) {
  const bool odd = lab.symbol.defective();
  const ComponentGroup g =
      component_group_rank(lab.symbol, odd ? GroupFlavor::O_odd : GroupFlavor::SO_even);
  json out = {{"symbol", to_string(lab.symbol)},
              {"bits", bits_string(lab)},
              {"type", std::string(witt_type_name(lab.form_type))},
              {"n1_or_n2", odd ? n1(lab.symbol) : n2(lab.symbol)},
              {"component_group_rank", g.rank},
              {"so_splits", g.so_splits},
              {"pair", to_json(label_to_pair(lab))},
              {"text", to_string(lab)}};
  if (lab.so != SoTag::None) out["so"] = lab.so == SoTag::I ? "I" : "II";
  return out;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json_value(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const QuadraticSpace& space) {
  json q = json::array();
  for (const auto& e : space.q_diag()) q.push_back(to_json_value(e));
  return {{"dim", space.dim()},
          {"q", space.field().order()},
          {"q_diag", q},
          {"gram", to_json(space.gram())}};
}

json to_json(const OrbitReport& report, bool timing) {
  json orbits = json::array();
  for (const auto& rec : report.orbits) {
    json o = {{"size", rec.size},
              {"centralizer_order", rec.centralizer_order},
              {"jordan_partition", rec.jordan},
              {"chi_values", rec.chi},
              {"symbol", to_string(rec.symbol)},
              {"representative", to_json(rec.representative.to_matrix(FieldCtx(std::countr_zero(report.q)),
                                                                      report.dim))},
              {"label_hits", rec.label_hits}};
    o["matched_label"] = rec.label ? to_json(*rec.label) : json(nullptr);
    orbits.push_back(o);
  }
  json out = {{"space", {{"dim", report.dim},
                         {"type", std::string(witt_type_name(report.type))},
                         {"q", report.q},
                         {"group", report.special ? "SO" : "O"}}},
              {"group_order", report.group_order},
              {"scanned", report.scanned},
              {"nilpotent_count", report.nilpotent_count},
              {"orbit_count", report.orbits.size()},
              {"orbits", orbits}};
  if (timing)
    out["timing"] = {{"enumerate_seconds", report.enumerate_seconds},
                     {"bfs_seconds", report.bfs_seconds}};
  return out;
}

json to_json(const ReconcileResult& result, bool timing) {
  json issues = json::array();
  for (const auto& i : result.issues) issues.push_back({{"check", i.check}, {"message", i.message}});
  return {{"pass", result.pass}, {"issues", issues}, {"report", to_json(result.report, timing)}};
}

}  // namespace orbitforge
