#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphbialg {

class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Simple finite graph. Vertices are 1-based in text form and 0-based in the
// API. Edges are stored with the canonical orientation (smaller endpoint
// first) and sorted lexicographically; the edge order fixes the basis order
// of the center everywhere downstream.
class Graph {
 public:
  // edges given as 0-based endpoint pairs in any order/orientation
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  // Text format: '#' comment lines; first data line is the vertex count;
  // each following data line is "i j" with 1-based endpoints.
  // Throws GraphError (with line number) on malformed input, loops,
  // duplicate edges, out-of-range indices, or isolated vertices.
  static Graph parse(std::string_view text);
  static Graph parse_file(const std::string& path);
  std::string serialize() const;

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int degree(int v) const;
  int min_degree() const;
  bool min_degree_at_least_two() const;

  // index into edges() of {u,v}, or -1 if absent
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
  const std::vector<int>& incident_edges(int v) const {
    return incident_[static_cast<std::size_t>(check_vertex(v))];
  }

  // Vertex pairs (i,j), i<j, whose S-entry must vanish for every solution of
  // the TST system: pairs joined by an edge, plus pairs covered by two
  // vertex-disjoint edges.
  std::vector<std::pair<int, int>> predicted_s_zero_pattern() const;

  std::string vertex_name(int v) const;  // "v<i>", 1-based
  std::string edge_name(int e) const;    // "a<i>_<j>", 1-based endpoints

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> incident_;

  int check_vertex(int v) const;
  void build_index();
};

}  // namespace graphbialg
