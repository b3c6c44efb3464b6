#include "bct/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bct {

CyclePermutation::CyclePermutation(std::vector<std::vector<int>> cycles)
    : cycles_(std::move(cycles)) {
  std::unordered_set<int> seen;
  for (auto& c : cycles_) {
    if (c.empty()) throw std::invalid_argument("permutation cycle must be nonempty");
    for (int v : c)
      if (!seen.insert(v).second)
        throw std::invalid_argument("permutation cycles must be pairwise disjoint");
    auto min_it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), min_it, c.end());
  }
  std::sort(cycles_.begin(), cycles_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
}

CyclePermutation CyclePermutation::from_mapping(const std::map<int, int>& mapping) {
  std::set<int> domain, range;
  for (const auto& [k, v] : mapping) {
    domain.insert(k);
    range.insert(v);
  }
  if (domain != range)
    throw std::invalid_argument("mapping is not a bijection of its domain");
  std::vector<std::vector<int>> cycles;
  std::set<int> used;
  for (const auto& [start, _] : mapping) {
    if (used.count(start)) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      cycle.push_back(x);
      used.insert(x);
      x = mapping.at(x);
    } while (x != start);
    cycles.push_back(std::move(cycle));
  }
  return CyclePermutation(std::move(cycles));
}

std::vector<int> CyclePermutation::support() const {
  std::vector<int> out;
  for (const auto& c : cycles_) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool CyclePermutation::in_support(int v) const {
  for (const auto& c : cycles_)
    if (std::find(c.begin(), c.end(), v) != c.end()) return true;
  return false;
}

bool CyclePermutation::is_derangement() const {
  for (const auto& c : cycles_)
    if (c.size() < 2) return false;
  return true;
}

int CyclePermutation::image(int v) const {
  for (const auto& c : cycles_) {
    auto it = std::find(c.begin(), c.end(), v);
    if (it != c.end()) return (std::next(it) == c.end()) ? c.front() : *std::next(it);
  }
  throw std::invalid_argument("value " + std::to_string(v) + " is not in the support");
}

int CyclePermutation::preimage(int v) const {
  for (const auto& c : cycles_) {
    auto it = std::find(c.begin(), c.end(), v);
    if (it != c.end()) return (it == c.begin()) ? c.back() : *std::prev(it);
  }
  throw std::invalid_argument("value " + std::to_string(v) + " is not in the support");
}

std::string CyclePermutation::str() const {
  if (cycles_.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cycles_) {
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << " ";
      os << c[i];
    }
    os << ")";
  }
  return os.str();
}

CyclePermutation parse_permutation(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::runtime_error("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::runtime_error("permutation parse error: expected '(' at position " +
                               std::to_string(i));
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      bool neg = false;
      if (text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::runtime_error("permutation parse error: expected an integer at position " +
                                 std::to_string(i));
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + (text[i++] - '0');
      cycle.push_back(neg ? -value : value);
      skip_ws();
    }
    if (i == text.size()) throw std::runtime_error("permutation parse error: missing ')'");
    ++i;  // consume ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return CyclePermutation(std::move(cycles));
}

std::vector<CyclePermutation> all_derangements(const std::vector<int>& values) {
  std::vector<int> base = values;
  std::sort(base.begin(), base.end());
  if (std::adjacent_find(base.begin(), base.end()) != base.end())
    throw std::invalid_argument("derangement base set has repeated values");
  std::vector<CyclePermutation> out;
  std::vector<int> perm = base;
  do {
    bool fixed_point = false;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (perm[i] == base[i]) {
        fixed_point = true;
        break;
      }
    if (fixed_point) continue;
    std::map<int, int> mapping;
    for (std::size_t i = 0; i < base.size(); ++i) mapping[base[i]] = perm[i];
    out.push_back(CyclePermutation::from_mapping(mapping));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Canopy canopy(const CyclePermutation& w, int t) {
  if (!w.in_support(t))
    throw std::invalid_argument("canopy: vertex is not in the support of the permutation");
  Canopy c;
  c.rho.push_back(t);
  int x = w.image(t);
  while (x > t) {
    c.rho.push_back(x);
    x = w.image(x);
  }
  int y = w.preimage(t);
  while (y > t) y = w.preimage(y);
  c.lambda = y;
  std::sort(c.rho.begin(), c.rho.end());
  return c;
}

bool is_graph_valid(const OrderedGraph& g, const CyclePermutation& w) {
  if (w.support() != g.keys())
    throw std::invalid_argument("permutation support does not match the vertex set");
  for (int t : g.keys()) {
    Canopy c = canopy(w, t);
    bool ok = false;
    for (int r : c.rho)
      if (g.has_edge(c.lambda, r)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

std::vector<CyclePermutation> derangements_by_criterion(const OrderedGraph& g) {
  if (!g.all_tokens_singleton())
    throw std::invalid_argument("the validity criterion is stated on singleton vertices");
  std::vector<CyclePermutation> out;
  for (const auto& w : all_derangements(g.keys()))
    if (is_graph_valid(g, w)) out.push_back(w);
  return out;
}

CyclePermutation lift_contraction(const CyclePermutation& w, const VertexToken& s,
                                  const VertexToken& t) {
  int x = s.key();
  if (!w.in_support(x))
    throw std::invalid_argument("lift_contraction: merged vertex is not in the support");
  std::vector<int> replacement = s.ids;
  replacement.insert(replacement.end(), t.ids.begin(), t.ids.end());
  auto cycles = w.cycles();
  for (auto& c : cycles) {
    auto it = std::find(c.begin(), c.end(), x);
    if (it == c.end()) continue;
    std::size_t pos = static_cast<std::size_t>(it - c.begin());
    c.erase(it);
    c.insert(c.begin() + pos, replacement.begin(), replacement.end());
    break;
  }
  return CyclePermutation(std::move(cycles));
}

CyclePermutation lift_extraction(const CyclePermutation& w, int s, int t) {
  return lift_extraction(w, VertexToken(s), VertexToken(t));
}

CyclePermutation lift_extraction(const CyclePermutation& w, const VertexToken& s,
                                 const VertexToken& t) {
  for (int id : s.ids)
    if (w.in_support(id))
      throw std::invalid_argument("lift_extraction: endpoint overlaps the support");
  for (int id : t.ids)
    if (w.in_support(id))
      throw std::invalid_argument("lift_extraction: endpoint overlaps the support");
  auto cycles = w.cycles();
  std::vector<int> cycle = s.ids;
  cycle.insert(cycle.end(), t.ids.begin(), t.ids.end());
  cycles.push_back(std::move(cycle));
  return CyclePermutation(std::move(cycles));
}

namespace {

using PermList = std::vector<CyclePermutation>;

CyclePermutation relabel(const CyclePermutation& w, const std::unordered_map<int, int>& m) {
  auto cycles = w.cycles();
  for (auto& c : cycles)
    for (int& v : c) v = m.at(v);
  return CyclePermutation(std::move(cycles));
}

// Key-level contraction lift: the merged vertex keeps s's key, so undoing the
// contraction inserts t right after s in its cycle.
CyclePermutation split_letter(const CyclePermutation& w, int s, int t) {
  auto cycles = w.cycles();
  for (auto& c : cycles) {
    auto it = std::find(c.begin(), c.end(), s);
    if (it == c.end()) continue;
    c.insert(std::next(it), t);
    return CyclePermutation(std::move(cycles));
  }
  throw std::logic_error("split_letter: merged vertex missing from the support");
}

void require_disjoint(const PermList& a, const PermList& b) {
  PermList common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty())
    throw std::logic_error("derangement recursion produced overlapping subsets");
}

PermList d_rec(const OrderedGraph& g, std::unordered_map<std::string, PermList>& memo) {
  if (g.has_isolated_vertex()) return {};
  if (g.size() == 2) {
    auto ks = g.keys();  // no isolated vertex, so the edge is present
    return {CyclePermutation({{ks[0], ks[1]}})};
  }
  auto cf = canonical_form(g);
  if (auto it = memo.find(cf.key); it != memo.end()) {
    std::unordered_map<int, int> back;
    for (std::size_t i = 0; i < cf.rank_to_key.size(); ++i)
      back.emplace(static_cast<int>(i) + 1, cf.rank_to_key[i]);
    PermList out;
    out.reserve(it->second.size());
    for (const auto& w : it->second) out.push_back(relabel(w, back));
    return out;  // order-preserving relabel keeps the sort order
  }
  Edge e = *maximal_edge(g);
  PermList from_deletion = d_rec(delete_edge(g, e), memo);
  PermList from_contraction;
  for (const auto& w : d_rec(contract_edge(g, e), memo))
    from_contraction.push_back(split_letter(w, e.u, e.v));
  PermList from_extraction;
  for (const auto& w : d_rec(extract_edge(g, e), memo))
    from_extraction.push_back(lift_extraction(w, e.u, e.v));
  std::sort(from_contraction.begin(), from_contraction.end());
  std::sort(from_extraction.begin(), from_extraction.end());
  require_disjoint(from_deletion, from_contraction);
  require_disjoint(from_deletion, from_extraction);
  require_disjoint(from_contraction, from_extraction);
  PermList result = std::move(from_deletion);
  result.insert(result.end(), from_contraction.begin(), from_contraction.end());
  result.insert(result.end(), from_extraction.begin(), from_extraction.end());
  std::sort(result.begin(), result.end());

  std::unordered_map<int, int> fwd;
  for (std::size_t i = 0; i < cf.rank_to_key.size(); ++i)
    fwd.emplace(cf.rank_to_key[i], static_cast<int>(i) + 1);
  PermList canonical;
  canonical.reserve(result.size());
  for (const auto& w : result) canonical.push_back(relabel(w, fwd));
  memo.emplace(std::move(cf.key), std::move(canonical));
  return result;
}

}  // namespace

std::vector<CyclePermutation> derangements_recursive(const OrderedGraph& g) {
  if (g.empty())
    throw std::invalid_argument("derangement set is undefined for the empty graph");
  std::unordered_map<std::string, PermList> memo;  // confined to this computation
  PermList key_level = d_rec(g, memo);
  if (g.all_tokens_singleton()) return key_level;
  PermList out;
  out.reserve(key_level.size());
  for (const auto& w : key_level) {
    std::vector<std::vector<int>> flat;
    flat.reserve(w.cycles().size());
    for (const auto& c : w.cycles()) {
      std::vector<int> fc;
      for (int k : c) {
        const auto& ids = g.token(k).ids;
        fc.insert(fc.end(), ids.begin(), ids.end());
      }
      flat.push_back(std::move(fc));
    }
    out.emplace_back(std::move(flat));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, int> cycle_count_histogram(const std::vector<CyclePermutation>& dset) {
  std::map<int, int> hist;
  for (const auto& w : dset) ++hist[w.cycle_count()];
  return hist;
}

std::vector<CyclePermutation> alternating_excedance_set(int r) {
  if (r < 1) throw std::invalid_argument("alternating excedances need r >= 1");
  int n = 2 * r;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::vector<CyclePermutation> out;
  do {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      int wi = perm[i - 1];
      ok = (i % 2 == 1) ? wi > i : wi < i;
    }
    if (!ok) continue;
    std::map<int, int> mapping;
    for (int i = 1; i <= n; ++i) mapping[i] = perm[i - 1];
    out.push_back(CyclePermutation::from_mapping(mapping));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void parsings_rec(const std::vector<int>& letters, std::size_t pos,
                  std::vector<std::vector<int>>& blocks, std::vector<CyclePermutation>& out) {
  if (pos == letters.size()) {
    out.emplace_back(blocks);
    return;
  }
  std::size_t remaining = letters.size() - pos;
  for (std::size_t len = 2; len <= remaining; ++len) {
    if (remaining - len == 1) continue;  // cannot leave a lone letter behind
    blocks.emplace_back(letters.begin() + pos, letters.begin() + pos + len);
    parsings_rec(letters, pos + len, blocks, out);
    blocks.pop_back();
  }
}

}  // namespace

std::vector<CyclePermutation> valid_parsings(const std::vector<int>& letters) {
  std::set<int> distinct(letters.begin(), letters.end());
  if (distinct.size() != letters.size())
    throw std::invalid_argument("valid parsings need distinct letters");
  std::vector<CyclePermutation> out;
  std::vector<std::vector<int>> blocks;
  parsings_rec(letters, 0, blocks, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool same_cycle(const CyclePermutation& p, const std::vector<int>& required) {
  for (const auto& c : p.cycles()) {
    bool all = true;
    for (int v : required)
      if (std::find(c.begin(), c.end(), v) == c.end()) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::vector<CyclePermutation> coxeter_derangement_set(CoxeterFamily f, int n) {
  std::vector<int> s;
  switch (f) {
    case CoxeterFamily::A: {
      if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
      for (int i = 1; i <= n; ++i) s.push_back(i);
      return valid_parsings(s);
    }
    case CoxeterFamily::D: {
      // Letters 1,2,n,3,...,n-1; keep parsings putting 2 and n in one cycle.
      if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
      s = {1, 2, n};
      for (int i = 3; i <= n - 1; ++i) s.push_back(i);
      std::vector<CyclePermutation> out;
      for (const auto& p : valid_parsings(s))
        if (same_cycle(p, {2, n})) out.push_back(p);
      return out;
    }
    case CoxeterFamily::E: {
      // Letters 1,2,3,n,4,...,n-1; keep parsings putting 3 and n in one cycle.
      if (n < 5) throw std::invalid_argument("E_n requires n >= 5");
      s = {1, 2, 3, n};
      for (int i = 4; i <= n - 1; ++i) s.push_back(i);
      std::vector<CyclePermutation> out;
      for (const auto& p : valid_parsings(s))
        if (same_cycle(p, {3, n})) out.push_back(p);
      return out;
    }
    case CoxeterFamily::ATilde: {
      // Parsings of 1..n, plus for each k >= 3 the parsings of the rotated
      // string 1,k,...,n,2,...,k-1 that keep {1,k,...,n} in one cycle.
      if (n < 3) throw std::invalid_argument("Atilde_n requires n >= 3");
      std::set<CyclePermutation> acc;
      for (int i = 1; i <= n; ++i) s.push_back(i);
      for (const auto& p : valid_parsings(s)) acc.insert(p);
      for (int k = 3; k <= n; ++k) {
        std::vector<int> rotated{1};
        for (int i = k; i <= n; ++i) rotated.push_back(i);
        for (int i = 2; i <= k - 1; ++i) rotated.push_back(i);
        std::vector<int> required{1};
        for (int i = k; i <= n; ++i) required.push_back(i);
        for (const auto& p : valid_parsings(rotated))
          if (same_cycle(p, required)) acc.insert(p);
      }
      return {acc.begin(), acc.end()};
    }
  }
  throw std::invalid_argument("unknown Coxeter family");
}

}  // namespace bct
