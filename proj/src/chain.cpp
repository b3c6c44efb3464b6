#include "bct/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace bct {

Word normal_form(Word word, const OrderedGraph& g) {
  std::unordered_set<int> seen;
  for (int v : word) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("word letter " + std::to_string(v) + " is not a vertex");
    if (!seen.insert(v).second)
      throw std::invalid_argument("word has a repeated letter " + std::to_string(v));
  }
  Word out;
  out.reserve(word.size());
  while (!word.empty()) {
    std::size_t best = word.size();
    for (std::size_t i = 0; i < word.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j)
        if (g.has_edge(word[j], word[i])) movable = false;
      if (movable && (best == word.size() || word[i] < word[best])) best = i;
    }
    out.push_back(word[best]);
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

std::vector<Word> cells_of_rank(const OrderedGraph& g, int k) {
  if (k < -1 || k > g.size() - 1)
    throw std::invalid_argument("cell rank out of range");
  if (k == -1) return {};  // the empty word is ignored
  const int length = k + 1;
  const auto keys = g.keys();
  std::set<Word> classes;
  Word current;
  std::vector<bool> used(keys.size(), false);
  // Enumerate all injective words of the given length and deduplicate by
  // normal form.
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == length) {
      classes.insert(normal_form(current, g));
      return;
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      current.push_back(keys[i]);
      self(self);
      current.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return {classes.begin(), classes.end()};
}

ChainF2::ChainF2(std::shared_ptr<const OrderedGraph> ambient, std::set<Word> terms, int len)
    : ambient_(std::move(ambient)), terms_(std::move(terms)), len_(terms_.empty() ? 0 : len) {}

ChainF2 ChainF2::zero(const OrderedGraph& g) {
  return ChainF2(std::make_shared<OrderedGraph>(g), {}, 0);
}

ChainF2 ChainF2::cell(Word w, const OrderedGraph& g) {
  if (w.empty()) throw std::invalid_argument("the empty word is not a cell");
  Word nf = normal_form(std::move(w), g);
  int len = static_cast<int>(nf.size());
  return ChainF2(std::make_shared<OrderedGraph>(g), {std::move(nf)}, len);
}

ChainF2 ChainF2::from_words(const std::vector<Word>& words, const OrderedGraph& g) {
  ChainF2 acc = zero(g);
  for (const auto& w : words) acc = acc + cell(w, g);
  return acc;
}

int ChainF2::degree() const {
  if (is_zero()) throw std::logic_error("the zero chain has no degree");
  return len_ - 1;
}

namespace {

void require_same_ambient(const ChainF2& x, const ChainF2& y) {
  if (x.ambient_ptr() != y.ambient_ptr() && !(x.ambient() == y.ambient()))
    throw std::invalid_argument("chains live over different graphs");
}

}  // namespace

ChainF2 ChainF2::operator+(const ChainF2& rhs) const {
  require_same_ambient(*this, rhs);
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  if (len_ != rhs.len_)
    throw std::invalid_argument("cannot add chains of different degrees");
  std::set<Word> acc = terms_;
  for (const auto& w : rhs.terms_) {
    auto [it, inserted] = acc.insert(w);
    if (!inserted) acc.erase(it);
  }
  return ChainF2(ambient_, std::move(acc), len_);
}

bool ChainF2::operator==(const ChainF2& rhs) const {
  if (!(ambient_ == rhs.ambient_ || ambient() == rhs.ambient())) return false;
  return terms_ == rhs.terms_;
}

std::string ChainF2::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& w : terms_) {
    if (!first_term) os << " + ";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << " ";
      os << w[i];
    }
    first_term = false;
  }
  return os.str();
}

ChainF2 concat_product(const ChainF2& x, const ChainF2& y) {
  require_same_ambient(x, y);
  if (x.is_zero() || y.is_zero()) return ChainF2(x.ambient_, {}, 0);
  const OrderedGraph& g = x.ambient();
  std::set<Word> acc;
  for (const auto& sigma : x.terms()) {
    for (const auto& tau : y.terms()) {
      bool shared = false;
      for (int v : tau)
        if (std::find(sigma.begin(), sigma.end(), v) != sigma.end()) {
          shared = true;
          break;
        }
      if (shared) continue;
      Word joined = sigma;
      joined.insert(joined.end(), tau.begin(), tau.end());
      Word nf = normal_form(std::move(joined), g);
      auto [it, inserted] = acc.insert(std::move(nf));
      if (!inserted) acc.erase(it);
    }
  }
  return ChainF2(x.ambient_, std::move(acc), x.len_ + y.len_);
}

ChainF2 bracket(const ChainF2& a, const ChainF2& b) {
  return concat_product(a, b) + concat_product(b, a);
}

ChainF2 partial_v(const ChainF2& x, int v) {
  if (!x.ambient().has_vertex(v))
    throw std::invalid_argument("partial_v: " + std::to_string(v) + " is not a vertex");
  std::set<Word> acc;
  for (const auto& w : x.terms()) {
    auto it = std::find(w.begin(), w.end(), v);
    if (it == w.end()) continue;
    Word shorter = w;
    shorter.erase(shorter.begin() + (it - w.begin()));
    if (shorter.empty()) continue;  // deleting the last letter lands on the ignored empty word
    Word nf = normal_form(std::move(shorter), x.ambient());
    auto [pos, inserted] = acc.insert(std::move(nf));
    if (!inserted) acc.erase(pos);
  }
  return ChainF2(x.ambient_, std::move(acc), x.len_ - 1);
}

ChainF2 differential(const ChainF2& x) {
  ChainF2 acc = ChainF2::zero(x.ambient());
  for (int v : x.ambient().keys()) acc = acc + partial_v(x, v);
  return acc;
}

ChainF2 collapse(const ChainF2& x, const OrderedGraph& g) {
  if (g.keys() != x.ambient().keys())
    throw std::invalid_argument("collapse: graphs must share one vertex set");
  for (const auto& [u, v] : g.edges())
    if (!x.ambient().has_edge(u, v))
      throw std::invalid_argument("collapse: target must be a subgraph of the ambient graph");
  auto target = std::make_shared<OrderedGraph>(g);
  std::set<Word> acc;
  for (const auto& w : x.terms()) {
    Word nf = normal_form(w, g);
    auto [it, inserted] = acc.insert(std::move(nf));
    if (!inserted) acc.erase(it);
  }
  return ChainF2(std::move(target), std::move(acc), x.len_);
}

}  // namespace bct
