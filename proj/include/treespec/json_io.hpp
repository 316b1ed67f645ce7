#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "treespec/eigen_locate.hpp"
#include "treespec/polynomial.hpp"
#include "treespec/tree.hpp"
#include "treespec/verifier.hpp"

namespace treespec {

// All documents carry {"schema": "treespec/1"} and keep insertion key order
// so identical invocations serialize byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "treespec/1";

Json polynomial_json(const IntPolynomial& p);  // degree-ascending decimal strings
Json char_poly_json(int n, const IntPolynomial& p);
Json spectrum_report_json(const SpectrumReport& rep);
Json subdivided_edges_json(const std::vector<SubdividedEdge>& edges);
Json verification_report_json(const VerificationReport& rep);
Json sign_trace_json(const SignTrace& trace);
Json integral_trees_json(const std::vector<std::pair<Tree, SpectrumReport>>& found);

// One row per panel: index, interval bounds, then a sign column per path vertex.
std::string sign_trace_csv(const SignTrace& trace);

}  // namespace treespec
