#ifndef BCT_CHAIN_HPP
#define BCT_CHAIN_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "bct/graph.hpp"

namespace bct {

// An injective word: distinct vertex keys read left to right.
using Word = std::vector<int>;

// Lexicographically least representative of the commutation class of the
// word: two letters commute exactly when they are not adjacent in g. Computed
// greedily by repeatedly emitting the smallest letter that commutes with
// everything still in front of it. Throws on repeated letters or letters
// outside V(g).
Word normal_form(Word word, const OrderedGraph& g);

// All commutation classes of injective words of length k+1, as sorted normal
// forms. k = -1 yields the empty set: the empty word is ignored throughout.
std::vector<Word> cells_of_rank(const OrderedGraph& g, int k);

// Homogeneous formal F2-sum of cells of one boolean complex. Terms are
// normal words of a common length; presence encodes coefficient 1, so
// addition is symmetric difference. The zero chain combines with any degree.
class ChainF2 {
 public:
  static ChainF2 zero(const OrderedGraph& g);
  static ChainF2 cell(Word w, const OrderedGraph& g);
  static ChainF2 from_words(const std::vector<Word>& words, const OrderedGraph& g);

  const OrderedGraph& ambient() const { return *ambient_; }
  std::shared_ptr<const OrderedGraph> ambient_ptr() const { return ambient_; }
  const std::set<Word>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int word_length() const { return len_; }
  int degree() const;  // word length minus 1; throws on the zero chain

  ChainF2 operator+(const ChainF2& rhs) const;
  bool operator==(const ChainF2& rhs) const;

  std::string str() const;  // "1 2 + 2 1"; "0" for the zero chain

 private:
  ChainF2(std::shared_ptr<const OrderedGraph> ambient, std::set<Word> terms, int len);

  std::shared_ptr<const OrderedGraph> ambient_;
  std::set<Word> terms_;
  int len_ = 0;  // common term length; 0 for the zero chain

  friend ChainF2 concat_product(const ChainF2& x, const ChainF2& y);
  friend ChainF2 partial_v(const ChainF2& x, int v);
  friend ChainF2 collapse(const ChainF2& x, const OrderedGraph& g);
};

// Bilinear extension of word concatenation; terms with common letters vanish.
ChainF2 concat_product(const ChainF2& x, const ChainF2& y);

// bracket(a, b) = ab + ba.
ChainF2 bracket(const ChainF2& a, const ChainF2& b);

// Deletes one vertex from every term containing it; terms without v map to
// zero, as does the deletion of the final letter of a one-letter term.
ChainF2 partial_v(const ChainF2& x, int v);

// Boundary map: sum of partial_v over all vertices.
ChainF2 differential(const ChainF2& x);

// Rereads the terms of a chain over a subgraph g on the same vertex set.
// Fewer edges mean a coarser complex, so distinct terms may merge and cancel.
ChainF2 collapse(const ChainF2& x, const OrderedGraph& g);

}  // namespace bct

#endif  // BCT_CHAIN_HPP
