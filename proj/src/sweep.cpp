#include "graphbialg/sweep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "graphbialg/invariants.hpp"
#include "graphbialg/tst.hpp"

namespace graphbialg {

namespace {

struct EdgeTable {
  int n;
  std::vector<std::pair<int, int>> edges;  // lexicographic over K_n
  std::vector<std::vector<int>> index;     // n x n -> edge position

  explicit EdgeTable(int n_) : n(n_), index(static_cast<std::size_t>(n_),
                                            std::vector<int>(n_, -1)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<int>(edges.size());
        index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            static_cast<int>(edges.size());
        edges.emplace_back(i, j);
      }
  }
};

// iterated neighbor-color refinement; colors are iso-invariant rank ids
std::vector<int> refine_colors(int n, const EdgeTable& et, std::uint32_t mask) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < et.edges.size(); ++e)
    if (mask & (1u << e)) {
      adj[static_cast<std::size_t>(et.edges[e].first)].push_back(
          et.edges[e].second);
      adj[static_cast<std::size_t>(et.edges[e].second)].push_back(
          et.edges[e].first);
    }
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    color[static_cast<std::size_t>(v)] =
        static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(
        static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> neigh;
      for (int u : adj[static_cast<std::size_t>(v)])
        neigh.push_back(color[static_cast<std::size_t>(u)]);
      std::sort(neigh.begin(), neigh.end());
      s.insert(s.end(), neigh.begin(), neigh.end());
      sig[static_cast<std::size_t>(v)] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    std::vector<int> fresh(static_cast<std::size_t>(n));
    for (const auto& [s, v] : sig)
      fresh[static_cast<std::size_t>(v)] = rank[s];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

// minimal relabeled edge bitmask over all permutations preserving the
// refinement color order
std::uint32_t canonical_mask(int n, const EdgeTable& et, std::uint32_t mask) {
  std::vector<int> color = refine_colors(n, et, mask);
  // vertices grouped by color, ascending
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
  });
  std::vector<std::pair<std::size_t, std::size_t>> classes;  // [begin,end)
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= order.size(); ++i) {
    if (i == order.size() ||
        color[static_cast<std::size_t>(order[i])] !=
            color[static_cast<std::size_t>(order[begin])]) {
      classes.emplace_back(begin, i);
      begin = i;
    }
  }
  std::uint32_t best = ~0u;
  std::vector<int> perm = order;
  // odometer over within-class permutations
  std::vector<std::vector<int>> class_vertices;
  for (auto [b, e] : classes)
    class_vertices.emplace_back(perm.begin() + static_cast<long>(b),
                                perm.begin() + static_cast<long>(e));
  auto apply = [&]() {
    // position in canonical order -> original vertex; invert to relabel
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::size_t k = 0;
    for (const auto& cls : class_vertices)
      for (int v : cls) pos[static_cast<std::size_t>(v)] = static_cast<int>(k++);
    std::uint32_t out = 0;
    for (std::size_t e = 0; e < et.edges.size(); ++e)
      if (mask & (1u << e)) {
        int a = pos[static_cast<std::size_t>(et.edges[e].first)];
        int b = pos[static_cast<std::size_t>(et.edges[e].second)];
        out |= 1u << et.index[static_cast<std::size_t>(a)]
                             [static_cast<std::size_t>(b)];
      }
    best = std::min(best, out);
  };
  // iterate the product of per-class permutations
  for (auto& cls : class_vertices) std::sort(cls.begin(), cls.end());
  std::size_t nc = class_vertices.size();
  std::vector<bool> done(nc, false);
  while (true) {
    apply();
    std::size_t i = 0;
    for (; i < nc; ++i) {
      if (std::next_permutation(class_vertices[i].begin(),
                                class_vertices[i].end()))
        break;
    }
    if (i == nc) break;
  }
  return best;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int vertex_count) {
  if (vertex_count < 1 || vertex_count > 7)
    throw std::invalid_argument("enumerate_graphs: vertex count must be 1..7");
  std::vector<Graph> out;
  if (vertex_count < 2) return out;  // a single vertex is always isolated
  EdgeTable et(vertex_count);
  const std::uint32_t total = 1u << et.edges.size();
  std::set<std::uint32_t> seen;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
    for (std::size_t e = 0; e < et.edges.size(); ++e)
      if (mask & (1u << e)) {
        ++deg[static_cast<std::size_t>(et.edges[e].first)];
        ++deg[static_cast<std::size_t>(et.edges[e].second)];
      }
    if (std::find(deg.begin(), deg.end(), 0) != deg.end()) continue;
    std::uint32_t canon = canonical_mask(vertex_count, et, mask);
    if (!seen.insert(canon).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < et.edges.size(); ++e)
      if (canon & (1u << e)) edges.push_back(et.edges[e]);
    out.emplace_back(vertex_count, std::move(edges));
  }
  return out;
}

bool is_connected(const Graph& g) {
  std::vector<bool> vis(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<int> stack{0};
  vis[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int e : g.incident_edges(u)) {
      auto [x, y] = g.edges()[static_cast<std::size_t>(e)];
      int other = x == u ? y : x;
      if (!vis[static_cast<std::size_t>(other)]) {
        vis[static_cast<std::size_t>(other)] = true;
        ++count;
        stack.push_back(other);
      }
    }
  }
  return count == g.vertex_count();
}

SweepSummary run_sweep(int max_vertices) {
  if (max_vertices < 2 || max_vertices > 7)
    throw std::invalid_argument("run_sweep: max vertices must be 2..7");
  SweepSummary sum;
  sum.max_vertices = max_vertices;
  for (int n = 2; n <= max_vertices; ++n) {
    for (Graph& g : enumerate_graphs(n)) {
      SweepGraphResult res{std::move(g)};
      const Graph& graph = res.graph;
      res.connected = is_connected(graph);
      res.min_deg2 = graph.min_degree_at_least_two();
      TwoStepAlgebra alg = TwoStepAlgebra::from_graph(graph);
      InvariantReport inv = invariant_report(alg);
      res.invariants_equal = inv.equal;
      res.invariant_support_ok = true;
      {
        ExteriorIndex idx(alg.dim());
        GradedMasks masks = graded_projectors(alg, idx);
        for (const auto& v : inv.basis)
          for (int flat : masks.lambda2_w)
            if (!v[static_cast<std::size_t>(flat)].is_zero())
              res.invariant_support_ok = false;
      }
      ZeroPatternReport zp = crosscheck_zero_pattern(graph);
      res.tst_dim = zp.solution_dim;
      res.tst_type = zp.tst_type;
      res.zero_pattern_ok = zp.pass();
      ++sum.graphs_checked;
      if (res.connected) ++sum.connected_count;
      if (res.tst_type) ++sum.tst_type_count;
      if (res.invariants_equal != res.min_deg2) ++sum.valency_violations;
      if (res.min_deg2 && !res.tst_type) ++sum.tst_violations;
      if (!res.zero_pattern_ok) ++sum.zero_pattern_violations;
      if (!res.invariant_support_ok) ++sum.invariant_support_violations;
      sum.results.push_back(std::move(res));
    }
  }
  return sum;
}

}  // namespace graphbialg
