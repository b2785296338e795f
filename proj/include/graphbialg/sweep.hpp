#pragma once

#include <vector>

#include "graphbialg/graph.hpp"

namespace graphbialg {

// All graphs on exactly vertex_count labeled vertices without isolated
// vertices, de-duplicated up to relabeling (canonical form = minimal edge
// bitmask over color-refinement-compatible permutations).
std::vector<Graph> enumerate_graphs(int vertex_count);

struct SweepGraphResult {
  Graph graph;
  bool connected = false;
  bool min_deg2 = false;
  bool invariants_equal = false;
  // every invariant bivector is supported in W^z (+) Lambda^2 z
  bool invariant_support_ok = false;
  bool tst_type = false;
  int tst_dim = 0;
  bool zero_pattern_ok = false;
};

struct SweepSummary {
  int max_vertices = 0;
  int graphs_checked = 0;
  int connected_count = 0;
  int tst_type_count = 0;
  // graphs where computed (Lambda^2 n)^n = Lambda^2 z disagrees with the
  // min-degree >= 2 criterion
  int valency_violations = 0;
  // graphs with min degree >= 2 whose TST solution space is nonzero
  int tst_violations = 0;
  // predicted-zero S entries that are nonzero on some solution basis vector
  int zero_pattern_violations = 0;
  // invariant bivectors with a Lambda^2 W component (must never happen)
  int invariant_support_violations = 0;
  std::vector<SweepGraphResult> results;

  bool pass() const {
    return valency_violations == 0 && tst_violations == 0 &&
           zero_pattern_violations == 0 && invariant_support_violations == 0;
  }
};

// Runs the valency-theorem, TST-corollary and zero-pattern cross-checks over
// every enumerated graph with 2..max_vertices vertices.
SweepSummary run_sweep(int max_vertices);

bool is_connected(const Graph& g);

}  // namespace graphbialg
