#include "bct/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bct {

BracketTree BracketTree::build(const CyclePermutation& w) {
  if (!w.is_derangement())
    throw std::invalid_argument("bracket trees are defined for derangements only");
  BracketTree tree;
  struct Item {
    int node;
    int key;  // leftmost letter of the quantity
  };
  std::vector<std::vector<Item>> cycles;
  for (const auto& c : w.cycles()) {
    std::vector<Item> items;
    for (int letter : c) {
      tree.nodes_.push_back({letter, -1, -1});
      items.push_back({static_cast<int>(tree.nodes_.size()) - 1, letter});
    }
    cycles.push_back(std::move(items));
  }
  // Merge the star whose right-hand quantity has the largest key until each
  // cycle is a single quantity.
  for (;;) {
    std::size_t best_cycle = cycles.size();
    std::size_t best_pos = 0;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci)
      for (std::size_t j = 0; j + 1 < cycles[ci].size(); ++j)
        if (best_cycle == cycles.size() || cycles[ci][j + 1].key > cycles[best_cycle][best_pos + 1].key) {
          best_cycle = ci;
          best_pos = j;
        }
    if (best_cycle == cycles.size()) break;
    auto& items = cycles[best_cycle];
    tree.nodes_.push_back({0, items[best_pos].node, items[best_pos + 1].node});
    items[best_pos] = {static_cast<int>(tree.nodes_.size()) - 1, items[best_pos].key};
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1);
  }
  for (const auto& items : cycles) tree.roots_.push_back(items.front().node);
  return tree;
}

int BracketTree::internal_node_count() const {
  int count = 0;
  for (const auto& n : nodes_) count += (n.left >= 0) ? 1 : 0;
  return count;
}

std::string BracketTree::str() const {
  std::ostringstream os;
  auto rec = [&](auto&& self, int idx) -> void {
    const Node& n = nodes_[static_cast<std::size_t>(idx)];
    if (n.left < 0) {
      os << n.letter;
      return;
    }
    os << "<";
    self(self, n.left);
    os << ",";
    self(self, n.right);
    os << ">";
  };
  for (int root : roots_) rec(rec, root);
  return os.str();
}

ChainF2 BracketTree::expand(const OrderedGraph& g) const {
  auto rec = [&](auto&& self, int idx) -> ChainF2 {
    const Node& n = nodes_[static_cast<std::size_t>(idx)];
    if (n.left < 0) return ChainF2::cell({n.letter}, g);
    return bracket(self(self, n.left), self(self, n.right));
  };
  ChainF2 acc = rec(rec, roots_.front());
  for (std::size_t i = 1; i < roots_.size(); ++i)
    acc = concat_product(acc, rec(rec, roots_[i]));
  return acc;
}

ChainF2 phi_complete(const CyclePermutation& w) {
  auto support = w.support();
  if (support.empty())
    throw std::invalid_argument("phi is undefined for the empty permutation");
  OrderedGraph complete = OrderedGraph::complete_on(support);
  return BracketTree::build(w).expand(complete);
}

ChainF2 phi_graph(const CyclePermutation& w, const OrderedGraph& g) {
  if (w.support() != g.keys())
    throw std::invalid_argument("phi_graph: permutation support must equal the vertex set");
  return collapse(phi_complete(w), g);
}

Gf2Matrix::Gf2Matrix(std::size_t cols)
    : cols_(cols), words_per_row_((cols + 63) / 64) {}

void Gf2Matrix::add_row(const std::vector<std::size_t>& one_columns) {
  std::vector<std::uint64_t> row(words_per_row_, 0);
  for (std::size_t c : one_columns) {
    if (c >= cols_) throw std::invalid_argument("column index out of range");
    row[c >> 6] ^= std::uint64_t{1} << (c & 63);
  }
  rows_.push_back(std::move(row));
}

std::size_t gf2_rank(const Gf2Matrix& m) {
  auto rows = m.data();
  const std::size_t words = rows.empty() ? 0 : rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    const std::size_t word = col >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (col & 63);
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][word] & bit) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || !(rows[r][word] & bit)) continue;
      for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::int64_t kernel_dimension_top(const OrderedGraph& g) {
  if (g.empty())
    throw std::invalid_argument("kernel dimension is undefined for the empty graph");
  const int n = g.size();
  if (n == 1) return 0;  // a point: the lone 0-cell is hit by the augmentation
  auto top = cells_of_rank(g, n - 1);
  auto lower = cells_of_rank(g, n - 2);
  std::map<Word, std::size_t> column;
  for (std::size_t i = 0; i < lower.size(); ++i) column.emplace(lower[i], i);
  Gf2Matrix m(lower.size());
  for (const auto& cell : top) {
    ChainF2 boundary = differential(ChainF2::cell(cell, g));
    std::vector<std::size_t> ones;
    for (const auto& term : boundary.terms()) ones.push_back(column.at(term));
    m.add_row(ones);
  }
  return static_cast<std::int64_t>(top.size()) - static_cast<std::int64_t>(gf2_rank(m));
}

std::vector<ChainF2> derangement_basis(const OrderedGraph& g) {
  if (g.empty())
    throw std::invalid_argument("derangement basis is undefined for the empty graph");
  std::vector<ChainF2> basis;
  for (const auto& w : derangements_recursive(g)) basis.push_back(phi_graph(w, g));
  return basis;
}

VerificationReport verify_basis(const OrderedGraph& g) {
  if (g.empty())
    throw std::invalid_argument("verification is undefined for the empty graph");
  VerificationReport r;
  r.graph = graph_label(g);
  r.beta = beta_recursive(g);
  auto dset = derangements_recursive(g);
  r.d_count_recursive = static_cast<std::int64_t>(dset.size());
  r.d_count_criterion = static_cast<std::int64_t>(derangements_by_criterion(g).size());
  r.kernel_dim = kernel_dimension_top(g);

  auto top = cells_of_rank(g, g.size() - 1);
  std::map<Word, std::size_t> column;
  for (std::size_t i = 0; i < top.size(); ++i) column.emplace(top[i], i);
  Gf2Matrix m(top.size());
  r.cycles_closed = true;
  for (const auto& w : dset) {
    ChainF2 chain = phi_graph(w, g);
    if (!differential(chain).is_zero()) r.cycles_closed = false;
    std::vector<std::size_t> ones;
    for (const auto& term : chain.terms()) ones.push_back(column.at(term));
    m.add_row(ones);
  }
  r.basis_rank = static_cast<std::int64_t>(gf2_rank(m));

  r.pass = r.cycles_closed && r.beta == r.d_count_recursive &&
           r.beta == r.d_count_criterion && r.beta == r.kernel_dim &&
           r.beta == r.basis_rank;
  return r;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::json j{{"graph", r.graph},
                   {"beta", r.beta},
                   {"d_count_recursive", r.d_count_recursive},
                   {"d_count_criterion", r.d_count_criterion},
                   {"kernel_dim", r.kernel_dim},
                   {"basis_rank", r.basis_rank},
                   {"cycles_closed", r.cycles_closed},
                   {"verdict", r.verdict()}};
  return j.dump();
}

}  // namespace bct
