#ifndef BCT_HOMOLOGY_HPP
#define BCT_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bct/chain.hpp"
#include "bct/graph.hpp"
#include "bct/permutation.hpp"

namespace bct {

// Full parenthesization of each cycle of a derangement into nested brackets,
// one binary tree per cycle, trees in standard cycle order. Built by the
// star-merging loop: a star sits between neighboring quantities, and the star
// whose right-hand quantity has the largest key merges first. The key of a
// quantity is its leftmost letter (for the segments arising here this equals
// the smallest letter it contains).
class BracketTree {
 public:
  static BracketTree build(const CyclePermutation& w);

  int internal_node_count() const;
  std::string str() const;  // "<1,<3,4>><2,6><<5,8>,7>"

  // Expands the forest with bracket and concatenation over the given graph.
  ChainF2 expand(const OrderedGraph& g) const;

 private:
  struct Node {
    int letter = 0;  // valid for leaves
    int left = -1;   // children; -1 marks a leaf
    int right = -1;
  };

  std::vector<Node> nodes_;
  std::vector<int> roots_;  // one per cycle, in cycle order
};

// The top chain assigned to a derangement over the complete graph on its
// support: each cycle fully bracketed, cycles concatenated. Has exactly
// 2^(support size - cycle count) terms.
ChainF2 phi_complete(const CyclePermutation& w);

// phi_complete pushed onto the boolean complex of g via the collapsing map.
// Requires support(w) == V(g).
ChainF2 phi_graph(const CyclePermutation& w, const OrderedGraph& g);

// Dense bit matrix over F2.
class Gf2Matrix {
 public:
  explicit Gf2Matrix(std::size_t cols);

  void add_row(const std::vector<std::size_t>& one_columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::vector<std::uint64_t>>& data() const { return rows_; }

 private:
  std::size_t cols_;
  std::size_t words_per_row_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Rank over F2 by Gaussian elimination on a private copy.
std::size_t gf2_rank(const Gf2Matrix& m);

// Nullity of the top differential, i.e. the dimension of the top homology of
// the boolean complex of g.
std::int64_t kernel_dimension_top(const OrderedGraph& g);

// The chains phi(w) for w in the derangement set of g, ordered by the
// standard cycle form of w.
std::vector<ChainF2> derangement_basis(const OrderedGraph& g);

struct VerificationReport {
  std::string graph;
  std::int64_t beta = 0;
  std::int64_t d_count_recursive = 0;
  std::int64_t d_count_criterion = 0;
  std::int64_t kernel_dim = 0;
  std::int64_t basis_rank = 0;
  bool cycles_closed = false;
  bool pass = false;

  std::string verdict() const { return pass ? "PASS" : "FAIL"; }
};

// Cross-checks every route to the top homology of g: the boolean number, the
// derangement set built recursively and by the validity criterion, the kernel
// of the top differential computed by elimination, and the rank of the
// derangement basis over the top cells. Passes when all five numbers agree
// and every basis chain is a homological cycle. Individual failures are
// reported, never thrown.
VerificationReport verify_basis(const OrderedGraph& g);

std::string report_to_json(const VerificationReport& r);

}  // namespace bct

#endif  // BCT_HOMOLOGY_HPP
