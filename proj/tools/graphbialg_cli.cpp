// Command-line front end: graph reports, axiom verification, classification,
// parameter tables and exhaustive theorem sweeps, all with deterministic
// JSON output.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 input error,
// 3 internal theorem-crosscheck violation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphbialg/report_json.hpp"

namespace {

using graphbialg::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCrosscheck = 3;

struct Output {
  std::string out_path;
  bool json_mode = false;

  void emit(const json& report, const std::string& human) const {
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot write " + out_path);
      f << report.dump(2) << "\n";
    }
    if (json_mode)
      std::cout << report.dump(2) << "\n";
    else
      std::cout << human;
  }
};

graphbialg::Graph load_graph(const std::string& path) {
  return graphbialg::Graph::parse_file(path);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_info(const std::string& path, const Output& out) {
  graphbialg::Graph g = load_graph(path);
  json rep = graphbialg::info_report(g);
  std::ostringstream h;
  h << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
    << " edges\n";
  h << "dim W = " << rep["dim_w"] << ", dim z = " << rep["dim_z"] << "\n";
  h << "degrees:";
  for (const auto& d : rep["degrees"]) h << " " << d;
  h << " (min " << rep["min_degree"] << ")\n";
  h << "algebra check: "
    << (rep["algebra_check"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  out.emit(rep, h.str());
  return kExitOk;
}

int cmd_invariants(const std::string& path, const Output& out) {
  graphbialg::Graph g = load_graph(path);
  json rep = graphbialg::invariants_report_json(g);
  std::ostringstream h;
  h << "dim (L2 n)^n = " << rep["dim_invariants"] << ", dim L2 z = "
    << rep["dim_lambda2z"] << "\n";
  h << "equal: " << yesno(rep["equal"].get<bool>()) << "\n";
  h << "min degree >= 2: "
    << yesno(rep["min_degree_at_least_two"].get<bool>()) << "\n";
  bool consistent = rep["valency_theorem_consistent"].get<bool>();
  h << "valency theorem: " << (consistent ? "consistent" : "VIOLATION") << "\n";
  out.emit(rep, h.str());
  return consistent ? kExitOk : kExitCrosscheck;
}

int cmd_tst(const std::string& path, const Output& out) {
  graphbialg::Graph g = load_graph(path);
  json rep = graphbialg::tst_report_json(g);
  std::ostringstream h;
  h << "TST solution dimension: " << rep["solution_dim"]
    << " (TST type: " << yesno(rep["tst_type"].get<bool>()) << ")\n";
  bool ok = rep["zero_pattern_violations"].empty();
  h << "zero-pattern check: " << (ok ? "pass" : "VIOLATION") << "\n";
  out.emit(rep, h.str());
  return ok ? kExitOk : kExitCrosscheck;
}

int cmd_verify(const std::string& path, const Output& out) {
  std::ifstream f(path);
  if (!f) throw graphbialg::JsonSchemaError("cannot open file: " + path);
  json doc_json;
  try {
    doc_json = json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw graphbialg::JsonSchemaError(std::string("invalid JSON: ") + e.what());
  }
  graphbialg::CobracketDoc doc = graphbialg::cobracket_from_json(doc_json);
  json rep = graphbialg::verify_report_json(doc);
  std::ostringstream h;
  h << "co-Jacobi: " << (rep["cojacobi"]["pass"].get<bool>() ? "pass" : "FAIL")
    << "\n";
  h << "1-cocycle: " << (rep["cocycle"]["pass"].get<bool>() ? "pass" : "FAIL")
    << "\n";
  bool bialg = rep["is_bialgebra"].get<bool>();
  h << "bialgebra: " << yesno(bialg) << "\n";
  h << "nearly coboundary: " << yesno(rep["nearly_coboundary"].get<bool>())
    << "\n";
  out.emit(rep, h.str());
  return bialg ? kExitOk : kExitVerifyFailed;
}

int cmd_classify(const std::string& path, const Output& out) {
  graphbialg::Graph g = load_graph(path);
  json rep = graphbialg::classify_report_json(g);
  std::ostringstream h;
  h << "lambda system dimension: " << rep["lambda_dim"] << "\n";
  h << "forced zero lambdas: " << rep["forced_zero_lambdas"].size() << " of "
    << g.vertex_count() * g.edge_count() << "\n";
  h << "omega free parameters: " << rep["omega_free_parameters"] << "\n";
  for (const auto& c : rep["caveats"])
    h << "caveat: " << c.get<std::string>() << "\n";
  out.emit(rep, h.str());
  return kExitOk;
}

int cmd_table(int max_n, const Output& out) {
  json rep = graphbialg::table_report_json(max_n);
  std::ostringstream h;
  h << "  n |  C_n r  C_n omega |  K_n r  K_n omega\n";
  for (const auto& row : rep["rows"]) {
    h << std::setw(3) << row["n"].get<int>() << " |" << std::setw(7)
      << row["cycle_r_params"].get<long long>() << std::setw(11)
      << row["cycle_omega_params"].get<long long>() << " |" << std::setw(7)
      << row["complete_r_params"].get<long long>() << std::setw(11)
      << row["complete_omega_params"].get<long long>() << "\n";
  }
  out.emit(rep, h.str());
  return kExitOk;
}

int cmd_sweep(int max_vertices, const Output& out) {
  graphbialg::SweepSummary s = graphbialg::run_sweep(max_vertices);
  json rep = graphbialg::sweep_report_json(s);
  std::ostringstream h;
  h << "graphs checked: " << s.graphs_checked << " (2.." << s.max_vertices
    << " vertices, no isolated vertices)\n";
  h << "connected: " << s.connected_count << ", TST type: " << s.tst_type_count
    << "\n";
  h << "violations: valency " << s.valency_violations << ", TST "
    << s.tst_violations << ", zero-pattern " << s.zero_pattern_violations
    << ", invariant-support " << s.invariant_support_violations << "\n";
  out.emit(rep, h.str());
  return s.pass() ? kExitOk : kExitCrosscheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-step nilpotent graph algebras and their Lie bialgebra "
               "cobrackets: exact checks, classification and tables"};
  app.require_subcommand(1);

  Output out;
  std::string graph_file, cobracket_file;
  int max_n = 6;
  int max_vertices = 6;
  bool diagonal = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out.out_path, "write full JSON report to a file");
    cmd->add_flag("--json", out.json_mode, "print the JSON report to stdout");
  };

  CLI::App* info = app.add_subcommand("info", "algebra dimensions and checks");
  info->add_option("graph", graph_file, "graph file")->required();
  add_common(info);

  CLI::App* inv = app.add_subcommand(
      "invariants", "invariant bivectors and the valency criterion");
  inv->add_option("graph", graph_file, "graph file")->required();
  add_common(inv);

  CLI::App* tst = app.add_subcommand(
      "tst", "TST solution space and the zero-pattern crosscheck");
  tst->add_option("graph", graph_file, "graph file")->required();
  add_common(tst);

  CLI::App* verify =
      app.add_subcommand("verify", "check the cobracket axioms exactly");
  verify->add_option("cobracket", cobracket_file, "cobracket JSON file")
      ->required();
  add_common(verify);

  CLI::App* classify = app.add_subcommand(
      "classify", "nearly-coboundary diagonal-family classification");
  classify->add_option("graph", graph_file, "graph file")->required();
  classify->add_flag("--diagonal", diagonal,
                     "classify the diagonal D-family (default mode)");
  add_common(classify);

  CLI::App* table =
      app.add_subcommand("table", "parameter counts for C_n and K_n");
  table->add_option("--max-n", max_n, "last row")->check(CLI::Range(3, 1000));
  add_common(table);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "exhaustive theorem cross-validation on small graphs");
  sweep->add_option("--max-vertices", max_vertices, "largest vertex count")
      ->check(CLI::Range(2, 7));
  add_common(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(graph_file, out);
    if (inv->parsed()) return cmd_invariants(graph_file, out);
    if (tst->parsed()) return cmd_tst(graph_file, out);
    if (verify->parsed()) return cmd_verify(cobracket_file, out);
    if (classify->parsed()) return cmd_classify(graph_file, out);
    if (table->parsed()) return cmd_table(max_n, out);
    if (sweep->parsed()) return cmd_sweep(max_vertices, out);
  } catch (const graphbialg::GraphError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const graphbialg::JsonSchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCrosscheck;
  }
  return kExitOk;
}
