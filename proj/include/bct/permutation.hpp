#ifndef BCT_PERMUTATION_HPP
#define BCT_PERMUTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "bct/graph.hpp"

namespace bct {

// Permutation of a finite set of ints, stored in standard cycle form: each
// cycle starts with its minimum and cycles are listed by increasing minima.
// Fixed points are kept as length-1 cycles so every permutation is
// representable; derangement status is a query.
class CyclePermutation {
 public:
  CyclePermutation() = default;  // the empty permutation
  explicit CyclePermutation(std::vector<std::vector<int>> cycles);

  static CyclePermutation from_mapping(const std::map<int, int>& mapping);

  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  std::vector<int> support() const;  // sorted
  bool in_support(int v) const;
  bool is_derangement() const;
  int cycle_count() const { return static_cast<int>(cycles_.size()); }

  int image(int v) const;
  int preimage(int v) const;

  std::string str() const;  // e.g. "(1 3 4)(2 6)(5 8 7)"

  bool operator==(const CyclePermutation& rhs) const { return cycles_ == rhs.cycles_; }
  bool operator<(const CyclePermutation& rhs) const { return cycles_ < rhs.cycles_; }

 private:
  std::vector<std::vector<int>> cycles_;
};

// Accepts any cycle form, e.g. "(3 4 1)(2 6)", and normalizes.
CyclePermutation parse_permutation(const std::string& text);

// All fixed-point-free permutations of the given set, sorted. Brute force;
// serves as the independent oracle for the recursive construction.
std::vector<CyclePermutation> all_derangements(const std::vector<int>& values);

// Walking outward from t in w's cycle: lambda is the first element <= t to
// the left, rho collects t and everything to the right before the walk drops
// to an element <= t. When t is the minimum of its cycle, rho is the whole
// cycle and lambda == t.
struct Canopy {
  int lambda = 0;
  std::vector<int> rho;  // sorted
};

Canopy canopy(const CyclePermutation& w, int t);

// True iff for every vertex t, lambda_w(t) is adjacent in g to some member of
// rho_w(t). Permutations with fixed points always fail. Requires
// support(w) == V(g).
bool is_graph_valid(const OrderedGraph& g, const CyclePermutation& w);

// Filter of all_derangements(V(g)) by is_graph_valid. Requires singleton
// vertex tokens.
std::vector<CyclePermutation> derangements_by_criterion(const OrderedGraph& g);

// Undoes a contraction in a permutation: the letter keyed like s (the merged
// vertex) is replaced by the id sequences of s then t. Composite tokens
// expand to their full id sequences.
CyclePermutation lift_contraction(const CyclePermutation& w, const VertexToken& s,
                                  const VertexToken& t);

// Adjoins the transposition (s t) to a permutation not touching s or t.
CyclePermutation lift_extraction(const CyclePermutation& w, int s, int t);
CyclePermutation lift_extraction(const CyclePermutation& w, const VertexToken& s,
                                 const VertexToken& t);

// The derangement set of an ordered graph, built by recursion on the maximal
// edge: union of the sets lifted from edge deletion, contraction and
// extraction. Result is flattened to original vertex ids and sorted.
std::vector<CyclePermutation> derangements_recursive(const OrderedGraph& g);

// Count of elements with exactly k cycles, for each k that occurs.
std::map<int, int> cycle_count_histogram(const std::vector<CyclePermutation>& dset);

// Permutations of {1..2r} with w(i) > i for odd i and w(i) < i for even i.
// Counted by the median Genocchi numbers. Brute force.
std::vector<CyclePermutation> alternating_excedance_set(int r);

// All partitions of the letter sequence into contiguous blocks of length at
// least 2, each block read left to right as one cycle. Counted by Fibonacci
// numbers.
std::vector<CyclePermutation> valid_parsings(const std::vector<int>& letters);

enum class CoxeterFamily { A, D, E, ATilde };

// Closed-form derangement sets for the Coxeter graph families, built from
// valid parsings with same-cycle filters. Independent of the edge recursion.
std::vector<CyclePermutation> coxeter_derangement_set(CoxeterFamily f, int n);

}  // namespace bct

#endif  // BCT_PERMUTATION_HPP
