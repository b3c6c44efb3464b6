#ifndef BCT_GRAPH_HPP
#define BCT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bct {

// A vertex of an ordered graph. Contracting an edge merges its endpoints, so
// a vertex in general carries the id sequence of everything merged into it.
// ids[0] is the order key that decides the vertex's place in the linear order.
struct VertexToken {
  std::vector<int> ids;

  VertexToken() = default;
  explicit VertexToken(int id) : ids{id} {}
  explicit VertexToken(std::vector<int> seq);

  int key() const { return ids.front(); }

  bool operator==(const VertexToken& rhs) const { return ids == rhs.ids; }
};

// Edge named by the order keys of its endpoints; normalized so u < v.
struct Edge {
  int u;
  int v;

  Edge(int a, int b);

  bool operator==(const Edge& rhs) const { return u == rhs.u && v == rhs.v; }
};

// Finite simple graph with linearly ordered vertices. Vertices are tokens
// with pairwise disjoint id sets, kept sorted by order key; edges are
// unordered key pairs. Values are immutable after construction.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  OrderedGraph(std::vector<VertexToken> tokens, const std::vector<Edge>& edges);

  // Singleton tokens 1..n.
  static OrderedGraph on_vertices(int n);
  static OrderedGraph on_vertices(int n, const std::vector<Edge>& edges);
  static OrderedGraph complete_on(const std::vector<int>& keys);

  int size() const { return static_cast<int>(tokens_.size()); }
  bool empty() const { return tokens_.empty(); }

  const std::vector<VertexToken>& tokens() const { return tokens_; }
  std::vector<int> keys() const;
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(int key) const;
  const VertexToken& token(int key) const;
  bool has_edge(int a, int b) const;
  std::vector<int> neighbors(int key) const;
  int degree(int key) const;
  bool is_isolated(int key) const { return degree(key) == 0; }
  bool has_isolated_vertex() const;
  bool all_tokens_singleton() const;

  bool operator==(const OrderedGraph& rhs) const {
    return tokens_ == rhs.tokens_ && edges_ == rhs.edges_;
  }

 private:
  std::vector<VertexToken> tokens_;      // sorted by key
  std::set<std::pair<int, int>> edges_;  // (u, v) with u < v, both token keys
};

// Vertices relabeled 1..n by order rank, edges rewritten accordingly and
// encoded as a string. Used as memo key by the recursions; rank_to_key maps
// results computed on the relabeled graph back to the original keys.
struct CanonicalForm {
  std::string key;
  std::vector<int> rank_to_key;
};

CanonicalForm canonical_form(const OrderedGraph& g);

// Short human-readable description, e.g. "n=4 e={1-2,1-3,2-4}".
std::string graph_label(const OrderedGraph& g);

// Text format: '#' comment lines; first data line is the vertex count n
// (vertices 1..n ordered numerically); each further data line "u v" with
// 1 <= u < v <= n adds one edge. parse_graph throws std::runtime_error with
// the offending line number on malformed input.
OrderedGraph parse_graph(const std::string& text);
std::string write_graph(const OrderedGraph& g);

// Edge operations. Deletion keeps the vertex set, contraction merges the two
// endpoints into one token keyed like the smaller one, extraction removes
// the edge together with both endpoints.
std::optional<Edge> maximal_edge(const OrderedGraph& g);
OrderedGraph delete_edge(const OrderedGraph& g, const Edge& e);
OrderedGraph contract_edge(const OrderedGraph& g, const Edge& e);
OrderedGraph extract_edge(const OrderedGraph& g, const Edge& e);

OrderedGraph disjoint_union(const OrderedGraph& a, const OrderedGraph& b);

// The boolean number: number of top-dimensional spheres in the wedge-sum
// homotopy type of the boolean complex of g.
std::int64_t beta_recursive(const OrderedGraph& g);

enum class Family { K, A, D, E, F, Cycle, ATilde };

Family parse_family(const std::string& tag);
std::string family_name(Family f);
OrderedGraph make_family(Family f, int param);

}  // namespace bct

#endif  // BCT_GRAPH_HPP
