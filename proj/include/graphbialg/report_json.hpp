#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "graphbialg/classify.hpp"
#include "graphbialg/cobracket.hpp"
#include "graphbialg/invariants.hpp"
#include "graphbialg/sweep.hpp"
#include "graphbialg/tst.hpp"

namespace graphbialg {

using json = nlohmann::ordered_json;

class JsonSchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// grade-2/3 vector as a list of {"basis": [names...], "coeff": "p/q"} terms,
// zeros omitted, basis tuples sorted
json ext_to_json(const ExtVector& v, const TwoStepAlgebra& a,
                 const ExteriorIndex& idx);

// Cobracket file: {"algebra": {"graph": ...} | {"dim_w":…, "tensors": …},
//                  "columns": {"<basis name>": [terms...]}}
struct CobracketDoc {
  std::optional<Graph> graph;
  Cobracket cobracket;
};

CobracketDoc cobracket_from_json(const json& j);
json cobracket_to_json(const Cobracket& d, const std::optional<Graph>& g);

json info_report(const Graph& g);
json invariants_report_json(const Graph& g);
json tst_report_json(const Graph& g);
json verify_report_json(const CobracketDoc& doc);
json classify_report_json(const Graph& g);
json table_report_json(int max_n);
json sweep_report_json(const SweepSummary& s);

}  // namespace graphbialg
