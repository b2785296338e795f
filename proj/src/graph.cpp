#include "graphbialg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace graphbialg {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count <= 0) throw GraphError("vertex count must be positive");
  for (auto& [u, v] : edges) {
    if (u == v) throw GraphError("loop edge");
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw GraphError("vertex index out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1]) throw GraphError("duplicate edge");
  edges_ = std::move(edges);
  build_index();
  for (int v = 0; v < vertex_count_; ++v)
    if (incident_[static_cast<std::size_t>(v)].empty())
      throw GraphError("isolated vertex " + std::to_string(v + 1));
}

void Graph::build_index() {
  incident_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (int e = 0; e < edge_count(); ++e) {
    incident_[static_cast<std::size_t>(edges_[e].first)].push_back(e);
    incident_[static_cast<std::size_t>(edges_[e].second)].push_back(e);
  }
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
  if (n < 2) throw GraphError("path needs at least 2 vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

Graph Graph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int vertex_count = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_line;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    if (vertex_count < 0) {
      long long n;
      if (!(ls >> n)) throw GraphError("expected vertex count", lineno);
      std::string rest;
      if (ls >> rest) throw GraphError("trailing tokens", lineno);
      if (n <= 0 || n > 1000000)
        throw GraphError("vertex count out of range", lineno);
      vertex_count = static_cast<int>(n);
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v)) throw GraphError("malformed edge line", lineno);
    std::string rest;
    if (ls >> rest) throw GraphError("trailing tokens", lineno);
    if (u < 1 || v < 1 || u > vertex_count || v > vertex_count)
      throw GraphError("vertex index out of range", lineno);
    if (u == v) throw GraphError("loop edge", lineno);
    int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
    if (a > b) std::swap(a, b);
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (edges[k] == std::make_pair(a, b))
        throw GraphError("duplicate edge", lineno);
    edges.emplace_back(a, b);
    edge_line.push_back(lineno);
  }
  if (vertex_count < 0) throw GraphError("missing vertex count");
  try {
    return Graph(vertex_count, std::move(edges));
  } catch (const GraphError& e) {
    throw GraphError(e.what(), lineno);
  }
}

Graph Graph::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw GraphError("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::string Graph::serialize() const {
  std::ostringstream out;
  out << vertex_count_ << "\n";
  for (const auto& [u, v] : edges_) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

int Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count_)
    throw GraphError("vertex index out of range");
  return v;
}

int Graph::degree(int v) const {
  return static_cast<int>(incident_[static_cast<std::size_t>(check_vertex(v))].size());
}

int Graph::min_degree() const {
  int m = degree(0);
  for (int v = 1; v < vertex_count_; ++v) m = std::min(m, degree(v));
  return m;
}

bool Graph::min_degree_at_least_two() const { return min_degree() >= 2; }

int Graph::edge_index(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it != edges_.end() && *it == std::make_pair(u, v))
    return static_cast<int>(it - edges_.begin());
  return -1;
}

std::vector<std::pair<int, int>> Graph::predicted_s_zero_pattern() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < vertex_count_; ++i) {
    for (int j = i + 1; j < vertex_count_; ++j) {
      bool zero = adjacent(i, j);
      if (!zero) {
        for (int ea : incident_edges(i)) {
          for (int eb : incident_edges(j)) {
            auto [a1, a2] = edges_[static_cast<std::size_t>(ea)];
            auto [b1, b2] = edges_[static_cast<std::size_t>(eb)];
            if (a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2) {
              zero = true;
              break;
            }
          }
          if (zero) break;
        }
      }
      if (zero) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string Graph::vertex_name(int v) const {
  check_vertex(v);
  return "v" + std::to_string(v + 1);
}

std::string Graph::edge_name(int e) const {
  if (e < 0 || e >= edge_count()) throw GraphError("edge index out of range");
  const auto& [u, v] = edges_[static_cast<std::size_t>(e)];
  return "a" + std::to_string(u + 1) + "_" + std::to_string(v + 1);
}

}  // namespace graphbialg
