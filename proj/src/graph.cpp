#include "bct/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bct {

VertexToken::VertexToken(std::vector<int> seq) : ids(std::move(seq)) {
  if (ids.empty()) throw std::invalid_argument("vertex token must carry at least one id");
  std::unordered_set<int> seen;
  for (int id : ids)
    if (!seen.insert(id).second)
      throw std::invalid_argument("vertex token has a repeated id");
}

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("edge endpoints must be distinct");
}

OrderedGraph::OrderedGraph(std::vector<VertexToken> tokens, const std::vector<Edge>& edges)
    : tokens_(std::move(tokens)) {
  std::sort(tokens_.begin(), tokens_.end(),
            [](const VertexToken& a, const VertexToken& b) { return a.key() < b.key(); });
  std::unordered_set<int> all_ids;
  for (const auto& t : tokens_)
    for (int id : t.ids)
      if (!all_ids.insert(id).second)
        throw std::invalid_argument("token id sets must be pairwise disjoint");
  for (std::size_t i = 1; i < tokens_.size(); ++i)
    if (tokens_[i - 1].key() == tokens_[i].key())
      throw std::invalid_argument("token order keys must be distinct");
  for (const Edge& e : edges) {
    if (!has_vertex(e.u) || !has_vertex(e.v))
      throw std::invalid_argument("edge endpoint is not a vertex of the graph");
    edges_.insert({e.u, e.v});
  }
}

OrderedGraph OrderedGraph::on_vertices(int n) { return on_vertices(n, {}); }

OrderedGraph OrderedGraph::on_vertices(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::vector<VertexToken> tokens;
  tokens.reserve(n);
  for (int i = 1; i <= n; ++i) tokens.emplace_back(i);
  return OrderedGraph(std::move(tokens), edges);
}

OrderedGraph OrderedGraph::complete_on(const std::vector<int>& keys) {
  std::vector<VertexToken> tokens;
  tokens.reserve(keys.size());
  for (int k : keys) tokens.emplace_back(k);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j) edges.emplace_back(keys[i], keys[j]);
  return OrderedGraph(std::move(tokens), edges);
}

std::vector<int> OrderedGraph::keys() const {
  std::vector<int> out;
  out.reserve(tokens_.size());
  for (const auto& t : tokens_) out.push_back(t.key());
  return out;
}

bool OrderedGraph::has_vertex(int key) const {
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), key,
                             [](const VertexToken& t, int k) { return t.key() < k; });
  return it != tokens_.end() && it->key() == key;
}

const VertexToken& OrderedGraph::token(int key) const {
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), key,
                             [](const VertexToken& t, int k) { return t.key() < k; });
  if (it == tokens_.end() || it->key() != key)
    throw std::invalid_argument("no vertex with order key " + std::to_string(key));
  return *it;
}

bool OrderedGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<int> OrderedGraph::neighbors(int key) const {
  std::vector<int> out;
  for (const auto& [u, v] : edges_) {
    if (u == key) out.push_back(v);
    if (v == key) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int OrderedGraph::degree(int key) const {
  int d = 0;
  for (const auto& [u, v] : edges_) d += (u == key || v == key) ? 1 : 0;
  return d;
}

bool OrderedGraph::has_isolated_vertex() const {
  for (const auto& t : tokens_)
    if (is_isolated(t.key())) return true;
  return false;
}

bool OrderedGraph::all_tokens_singleton() const {
  for (const auto& t : tokens_)
    if (t.ids.size() != 1) return false;
  return true;
}

CanonicalForm canonical_form(const OrderedGraph& g) {
  CanonicalForm cf;
  cf.rank_to_key = g.keys();
  std::unordered_map<int, int> rank_of;
  for (std::size_t i = 0; i < cf.rank_to_key.size(); ++i)
    rank_of[cf.rank_to_key[i]] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    int a = rank_of[u];
    int b = rank_of[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  std::string key;
  key.reserve(1 + 2 * edges.size());
  key.push_back(static_cast<char>(g.size()));
  for (const auto& [a, b] : edges) {
    key.push_back(static_cast<char>(a));
    key.push_back(static_cast<char>(b));
  }
  cf.key = std::move(key);
  return cf;
}

std::string graph_label(const OrderedGraph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << " e={";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) os << ",";
    os << u << "-" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

OrderedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0)
        throw std::runtime_error("graph parse error at line " + std::to_string(lineno) +
                                 ": expected vertex count");
      std::string trailing;
      if (ls >> trailing)
        throw std::runtime_error("graph parse error at line " + std::to_string(lineno) +
                                 ": unexpected trailing content after vertex count");
      continue;
    }
    int u = 0, v = 0;
    std::string trailing;
    if (!(ls >> u >> v) || (ls >> trailing))
      throw std::runtime_error("graph parse error at line " + std::to_string(lineno) +
                               ": expected an edge line \"u v\"");
    if (u == v)
      throw std::runtime_error("graph parse error at line " + std::to_string(lineno) +
                               ": loop edge " + std::to_string(u) + " " + std::to_string(v));
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::runtime_error("graph parse error at line " + std::to_string(lineno) +
                               ": vertex id out of range 1.." + std::to_string(n));
    if (u > v)
      throw std::runtime_error("graph parse error at line " + std::to_string(lineno) +
                               ": edges must be written with u < v");
    if (!seen.insert({u, v}).second)
      throw std::runtime_error("graph parse error at line " + std::to_string(lineno) +
                               ": duplicate edge");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::runtime_error("graph parse error: missing vertex count line");
  return OrderedGraph::on_vertices(n, edges);
}

std::string write_graph(const OrderedGraph& g) {
  if (!g.all_tokens_singleton())
    throw std::invalid_argument("graph file format covers graphs with singleton vertices only");
  std::ostringstream os;
  os << g.size() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

std::optional<Edge> maximal_edge(const OrderedGraph& g) {
  for (auto it = g.tokens().rbegin(); it != g.tokens().rend(); ++it) {
    auto nbrs = g.neighbors(it->key());
    if (!nbrs.empty()) return Edge(nbrs.back(), it->key());
  }
  return std::nullopt;
}

namespace {

void require_edge(const OrderedGraph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v))
    throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                " is not in the graph");
}

}  // namespace

OrderedGraph delete_edge(const OrderedGraph& g, const Edge& e) {
  require_edge(g, e);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (!(u == e.u && v == e.v)) edges.emplace_back(u, v);
  return OrderedGraph(g.tokens(), edges);
}

OrderedGraph contract_edge(const OrderedGraph& g, const Edge& e) {
  require_edge(g, e);
  const VertexToken& s = g.token(e.u);
  const VertexToken& t = g.token(e.v);
  std::vector<int> merged_ids = s.ids;
  merged_ids.insert(merged_ids.end(), t.ids.begin(), t.ids.end());
  std::vector<VertexToken> tokens;
  for (const auto& tok : g.tokens()) {
    if (tok.key() == e.u)
      tokens.emplace_back(merged_ids);
    else if (tok.key() != e.v)
      tokens.push_back(tok);
  }
  std::set<std::pair<int, int>> rewired;
  for (auto [u, v] : g.edges()) {
    if (u == e.u && v == e.v) continue;  // the contracted edge becomes a loop
    if (u == e.v) u = e.u;
    if (v == e.v) v = e.u;
    rewired.insert({std::min(u, v), std::max(u, v)});  // parallel edges collapse
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : rewired) edges.emplace_back(u, v);
  return OrderedGraph(std::move(tokens), edges);
}

OrderedGraph extract_edge(const OrderedGraph& g, const Edge& e) {
  require_edge(g, e);
  std::vector<VertexToken> tokens;
  for (const auto& tok : g.tokens())
    if (tok.key() != e.u && tok.key() != e.v) tokens.push_back(tok);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (u != e.u && u != e.v && v != e.u && v != e.v) edges.emplace_back(u, v);
  return OrderedGraph(std::move(tokens), edges);
}

OrderedGraph disjoint_union(const OrderedGraph& a, const OrderedGraph& b) {
  std::vector<VertexToken> tokens = a.tokens();
  tokens.insert(tokens.end(), b.tokens().begin(), b.tokens().end());
  std::vector<Edge> edges;
  for (const auto& [u, v] : a.edges()) edges.emplace_back(u, v);
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u, v);
  return OrderedGraph(std::move(tokens), edges);  // ctor rejects overlapping ids
}

namespace {

std::int64_t beta_impl(const OrderedGraph& g,
                       std::unordered_map<std::string, std::int64_t>& memo) {
  if (g.has_isolated_vertex()) return 0;
  if (g.size() == 2) return 1;  // no isolated vertex, so the edge is present
  auto cf = canonical_form(g);
  if (auto it = memo.find(cf.key); it != memo.end()) return it->second;
  Edge e = *maximal_edge(g);
  std::int64_t value = beta_impl(delete_edge(g, e), memo) +
                       beta_impl(contract_edge(g, e), memo) +
                       beta_impl(extract_edge(g, e), memo);
  memo.emplace(std::move(cf.key), value);
  return value;
}

}  // namespace

std::int64_t beta_recursive(const OrderedGraph& g) {
  if (g.empty()) throw std::invalid_argument("beta is undefined for the empty graph");
  std::unordered_map<std::string, std::int64_t> memo;  // confined to this computation
  return beta_impl(g, memo);
}

Family parse_family(const std::string& tag) {
  if (tag == "K") return Family::K;
  if (tag == "A") return Family::A;
  if (tag == "D") return Family::D;
  if (tag == "E") return Family::E;
  if (tag == "F") return Family::F;
  if (tag == "C" || tag == "cycle") return Family::Cycle;
  if (tag == "Atilde" || tag == "~A") return Family::ATilde;
  throw std::invalid_argument("unknown graph family \"" + tag +
                              "\" (expected K, A, D, E, F, cycle or Atilde)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::K: return "K";
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::Cycle: return "cycle";
    case Family::ATilde: return "Atilde";
  }
  return "?";
}

OrderedGraph make_family(Family f, int param) {
  const int n = param;
  std::vector<Edge> edges;
  switch (f) {
    case Family::K: {
      if (n < 1) throw std::invalid_argument("K_n requires n >= 1");
      std::vector<int> keys(n);
      for (int i = 0; i < n; ++i) keys[i] = i + 1;
      return OrderedGraph::complete_on(keys);
    }
    case Family::A: {
      if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      return OrderedGraph::on_vertices(n, edges);
    }
    case Family::D: {
      // Path 1..n-1 in path order, extra leaf n attached to the vertex
      // labeled 2, which is the degree-three vertex.
      if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, n);
      return OrderedGraph::on_vertices(n, edges);
    }
    case Family::E: {
      // Path 1..n-1 with the extra leaf n attached at the vertex labeled 3.
      if (n < 5) throw std::invalid_argument("E_n requires n >= 5");
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(3, n);
      return OrderedGraph::on_vertices(n, edges);
    }
    case Family::F: {
      // Staircase Ferrers graph: odd row vertices 1,3,..,2r-1, even column
      // vertices 2,4,..,2r; each odd vertex adjacent to every larger even one.
      if (n < 1) throw std::invalid_argument("F_r requires r >= 1");
      for (int o = 1; o <= 2 * n - 1; o += 2)
        for (int e = o + 1; e <= 2 * n; e += 2) edges.emplace_back(o, e);
      return OrderedGraph::on_vertices(2 * n, edges);
    }
    case Family::Cycle: {
      // Cycle where label i sits between labels i-1 and i+1 (mod n).
      if (n < 3) throw std::invalid_argument("cycle graph requires at least 3 vertices");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, n);
      return OrderedGraph::on_vertices(n, edges);
    }
    case Family::ATilde: {
      if (n < 3) throw std::invalid_argument("Atilde_n requires n >= 3");
      return make_family(Family::Cycle, n);
    }
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace bct
