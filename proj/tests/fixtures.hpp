#ifndef BCT_TESTS_FIXTURES_HPP
#define BCT_TESTS_FIXTURES_HPP

#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bct/graph.hpp"
#include "bct/chain.hpp"

namespace bct::testing {

// Four-vertex example used across the suites: the cycle 1-3-2-4.
inline OrderedGraph g4_example() {
  return OrderedGraph::on_vertices(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

// Seven-vertex tree: path 1-2-3-4 with a branch 3-5-6-7.
inline OrderedGraph tree7_example() {
  return OrderedGraph::on_vertices(7, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}});
}

inline unsigned pair_count(int n) { return static_cast<unsigned>(n * (n - 1) / 2); }

// Labeled graph from an edge-subset mask; bit order is lexicographic over
// the vertex pairs.
inline OrderedGraph graph_from_mask(int n, unsigned mask) {
  std::vector<Edge> edges;
  unsigned bit = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v, ++bit)
      if (mask >> bit & 1u) edges.emplace_back(u, v);
  return OrderedGraph::on_vertices(n, edges);
}

inline OrderedGraph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return OrderedGraph::on_vertices(n, edges);
}

inline bool is_connected(const OrderedGraph& g) {
  if (g.empty()) return true;
  auto keys = g.keys();
  std::set<int> visited;
  std::queue<int> frontier;
  frontier.push(keys.front());
  visited.insert(keys.front());
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int u : g.neighbors(v))
      if (visited.insert(u).second) frontier.push(u);
  }
  return visited.size() == keys.size();
}

// Length of the unique cycle of a connected unicyclic graph, found by
// pruning degree-1 vertices until only the cycle remains.
inline int unique_cycle_length(const OrderedGraph& g) {
  const auto keys = g.keys();
  std::set<int> alive(keys.begin(), keys.end());
  auto degree_in = [&](int v) {
    int d = 0;
    for (int u : g.neighbors(v)) d += alive.count(u) ? 1 : 0;
    return d;
  };
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (int v : std::vector<int>(alive.begin(), alive.end()))
      if (degree_in(v) <= 1) {
        alive.erase(v);
        pruned = true;
      }
  }
  return static_cast<int>(alive.size());
}

// Words from compact digit strings, e.g. "132" -> {1,3,2}.
inline std::vector<Word> words_from_digits(const std::vector<std::string>& digits) {
  std::vector<Word> out;
  for (const auto& s : digits) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace bct::testing

#endif  // BCT_TESTS_FIXTURES_HPP
