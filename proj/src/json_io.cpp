#include "treespec/json_io.hpp"

namespace treespec {

namespace {

std::string display_point(const TraceBreakpoint& b) {
  if (b.exact()) return to_string(b.lo);
  return to_string((b.lo + b.hi) / 2);
}

}  // namespace

Json polynomial_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(to_string(p.coeff(k)));
  return coeffs;
}

Json char_poly_json(int n, const IntPolynomial& p) {
  Json j;
  j["schema"] = kSchemaTag;
  j["n"] = n;
  j["coefficients"] = polynomial_json(p);
  return j;
}

Json spectrum_report_json(const SpectrumReport& rep) {
  Json j;
  j["schema"] = kSchemaTag;
  j["n"] = rep.n;
  j["coefficients"] = polynomial_json(rep.char_poly);
  Json spectrum = Json::array();
  for (const auto& [value, mult] : rep.integer_spectrum)
    spectrum.push_back(Json::array({to_string(value), mult}));
  j["integer_spectrum"] = spectrum;
  j["is_integral"] = rep.is_integral;
  j["distinct_in_open_m2_2"] = rep.distinct_in_open_m2_2;
  if (rep.witness) {
    j["witness"] = Json{{"lo", to_string(rep.witness->first)},
                        {"hi", to_string(rep.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json subdivided_edges_json(const std::vector<SubdividedEdge>& edges) {
  Json j;
  j["schema"] = kSchemaTag;
  Json list = Json::array();
  for (const auto& e : edges) {
    Json item;
    item["endpoints"] = Json::array({e.endpoints.first, e.endpoints.second});
    item["vertices"] = e.vertices;
    item["length"] = e.length;
    list.push_back(std::move(item));
  }
  j["edges"] = list;
  return j;
}

Json verification_report_json(const VerificationReport& rep) {
  Json j;
  j["schema"] = kSchemaTag;
  j["n_max"] = rep.n_max;
  j["k"] = rep.k;
  j["trees_checked"] = rep.trees_checked;
  Json violations = Json::array();
  for (const auto& v : rep.violations) {
    Json item;
    item["n"] = v.n;
    item["index"] = v.index;
    item["tree"] = v.tree_record;
    item["distinct_in_m2_2"] = v.distinct_in_m2_2;
    item["is_integral"] = v.is_integral;
    violations.push_back(std::move(item));
  }
  j["violations"] = violations;
  j["min_distinct_in_interval"] = rep.min_distinct_in_interval;
  j["elapsed_seconds"] = rep.elapsed_seconds;
  j["checkpoint"] = Json{{"n", rep.checkpoint.n}, {"index", rep.checkpoint.index}};
  return j;
}

Json sign_trace_json(const SignTrace& trace) {
  Json j;
  j["schema"] = kSchemaTag;
  j["path"] = trace.path;
  Json bps = Json::array();
  for (const auto& b : trace.breakpoints) {
    Json item;
    item["lo"] = to_string(b.lo);
    item["hi"] = to_string(b.hi);
    item["exact"] = b.exact();
    item["zero_positions"] = b.zero_positions;
    item["pole_positions"] = b.pole_positions;
    bps.push_back(std::move(item));
  }
  j["breakpoints"] = bps;
  j["panels"] = trace.panels;
  j["root_zero_count"] = trace.root_zero_count;
  return j;
}

Json integral_trees_json(const std::vector<std::pair<Tree, SpectrumReport>>& found) {
  Json j;
  j["schema"] = kSchemaTag;
  Json list = Json::array();
  for (const auto& [tree, rep] : found) {
    Json item;
    item["tree"] = format_edge_record(tree);
    item["spectrum"] = spectrum_report_json(rep);
    list.push_back(std::move(item));
  }
  j["integral_trees"] = list;
  return j;
}

std::string sign_trace_csv(const SignTrace& trace) {
  std::string out = "panel,lo,hi";
  for (size_t i = 0; i < trace.path.size(); ++i)
    out += ",v" + std::to_string(trace.path[i]);
  out += "\n";
  for (size_t p = 0; p < trace.panels.size(); ++p) {
    out += std::to_string(p) + ",";
    out += p == 0 ? "-2" : display_point(trace.breakpoints[p - 1]);
    out += ",";
    out += p == trace.panels.size() - 1 ? "2" : display_point(trace.breakpoints[p]);
    for (char c : trace.panels[p]) {
      out += ",";
      out.push_back(c);
    }
    out += "\n";
  }
  return out;
}

}  // namespace treespec
