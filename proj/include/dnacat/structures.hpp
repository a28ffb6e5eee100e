// Hom(epsilon, w): enumeration, counting and maximum-bond folding of the
// secondary structures on one word.

#ifndef DNACAT_STRUCTURES_HPP_
#define DNACAT_STRUCTURES_HPP_

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core.hpp"

namespace dnacat {

struct FoldConfig {
  /// Minimum number of unpaired slots inside every arc: j - i - 1 >= min_loop.
  std::size_t min_loop = 0;
};

inline bool is_member(const SecondaryStructure& s, const FoldConfig& cfg = {}) {
  if (!is_valid(s))
    return false;
  for (const Pair& p : s.arcs)
    if (p.j - p.i - 1 < cfg.min_loop)
      return false;
  return true;
}

/// Lazily yields every structure on a word, ordered lexicographically by
/// sorted arc list (so the empty structure comes first).
///
/// The structures form a prefix tree: the children of an arc list L are
/// L + [a] for compatible arcs a > back(L). A pre-order walk of that tree
/// is exactly the lexicographic order, and every node is a valid structure.
class StructureEnumerator {
public:
  StructureEnumerator(Word w, FoldConfig cfg) : word_(std::move(w)), cfg_(cfg) {
    partner_.assign(word_.size() + 1, 0);
  }

  std::optional<SecondaryStructure> next() {
    if (!started_) {
      started_ = true;
      cursors_.push_back(Pair{0, 0});
      return current();
    }
    while (!cursors_.empty()) {
      Pair& cur = cursors_.back();
      if (auto cand = next_candidate(cur)) {
        cur = *cand;
        push(*cand);
        cursors_.push_back(*cand);
        return current();
      }
      cursors_.pop_back();
      if (!arcs_.empty() && !cursors_.empty())
        pop();
    }
    return std::nullopt;
  }

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SecondaryStructure;
    using difference_type = std::ptrdiff_t;
    using pointer = const SecondaryStructure*;
    using reference = const SecondaryStructure&;

    iterator() = default;
    explicit iterator(StructureEnumerator* e) : e_(e) { ++*this; }
    reference operator*() const { return *value_; }
    pointer operator->() const { return &*value_; }
    iterator& operator++() {
      value_ = e_->next();
      if (!value_) e_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.e_ == b.e_; }

  private:
    StructureEnumerator* e_ = nullptr;
    std::optional<SecondaryStructure> value_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

private:
  SecondaryStructure current() const { return SecondaryStructure{word_, arcs_}; }

  bool compatible(std::size_t i, std::size_t j) const {
    if (partner_[i] || partner_[j])
      return false;
    if (j - i - 1 < cfg_.min_loop || !is_complementary(word_.at(i), word_.at(j)))
      return false;
    for (const Pair& p : arcs_)
      if ((p.i < i && i < p.j && p.j < j) || (i < p.i && p.i < j && j < p.j))
        return false;
    return true;
  }

  // Smallest compatible arc strictly greater than `after`.
  std::optional<Pair> next_candidate(Pair after) const {
    const std::size_t n = word_.size();
    std::size_t i = after.i == 0 ? 1 : after.i;
    std::size_t j = after.i == 0 ? i + 1 : after.j + 1;
    for (; i <= n; ++i, j = i + 1)
      for (; j <= n; ++j)
        if (compatible(i, j))
          return Pair{i, j};
    return std::nullopt;
  }

  void push(Pair p) {
    arcs_.push_back(p);
    partner_[p.i] = p.j;
    partner_[p.j] = p.i;
  }
  void pop() {
    Pair p = arcs_.back();
    arcs_.pop_back();
    partner_[p.i] = partner_[p.j] = 0;
  }

  Word word_;
  FoldConfig cfg_;
  PairList arcs_;
  std::vector<std::size_t> partner_;
  std::vector<Pair> cursors_;
  bool started_ = false;
};

inline StructureEnumerator enumerate(Word w, FoldConfig cfg = {}) {
  return StructureEnumerator(std::move(w), cfg);
}

inline std::vector<SecondaryStructure> enumerate_all(const Word& w, FoldConfig cfg = {}) {
  std::vector<SecondaryStructure> out;
  auto e = enumerate(w, cfg);
  for (auto& s : e)
    out.push_back(s);
  return out;
}

using BigCount = boost::multiprecision::cpp_int;

/// Number of structures, by the interval recursion
///   N(i,j) = N(i+1,j) + sum_k [pairable(i,k)] N(i+1,k-1) N(k+1,j).
inline BigCount count(const Word& w, FoldConfig cfg = {}) {
  const std::size_t n = w.size();
  // N[i][j] over 1-based closed intervals; j = i-1 is the empty interval.
  std::vector<std::vector<BigCount>> N(n + 2, std::vector<BigCount>(n + 2, 0));
  for (std::size_t i = 1; i <= n + 1; ++i)
    N[i][i - 1] = 1;
  for (std::size_t len = 1; len <= n; ++len)
    for (std::size_t i = 1; i + len - 1 <= n; ++i) {
      std::size_t j = i + len - 1;
      BigCount total = N[i + 1][j];
      for (std::size_t k = i + 1 + cfg.min_loop; k <= j; ++k)
        if (is_complementary(w.at(i), w.at(k)))
          total += N[i + 1][k - 1] * N[k + 1][j];
      N[i][j] = std::move(total);
    }
  return N[1][n];
}

struct MaxBondResult {
  std::size_t max_bonds = 0;
  std::vector<SecondaryStructure> witnesses;  // lexicographic arc-list order
};

/// Maximum bond count and every structure attaining it.
inline MaxBondResult max_bond(const Word& w, FoldConfig cfg = {}) {
  const std::size_t n = w.size();
  std::vector<std::vector<std::size_t>> best(n + 2, std::vector<std::size_t>(n + 2, 0));
  auto pairable = [&](std::size_t i, std::size_t k) {
    return k >= i + 1 + cfg.min_loop && is_complementary(w.at(i), w.at(k));
  };
  for (std::size_t len = 1; len <= n; ++len)
    for (std::size_t i = 1; i + len - 1 <= n; ++i) {
      std::size_t j = i + len - 1;
      std::size_t b = best[i + 1][j];
      for (std::size_t k = i + 1; k <= j; ++k)
        if (pairable(i, k))
          b = std::max(b, 1 + best[i + 1][k - 1] + best[k + 1][j]);
      best[i][j] = b;
    }

  // Every structure decomposes uniquely (position i unpaired, or paired with
  // k), so following all optimal branches yields each witness once.
  MaxBondResult r;
  r.max_bonds = n ? best[1][n] : 0;
  using Partial = PairList;
  auto all = [&](auto&& self, std::size_t i, std::size_t j) -> std::vector<Partial> {
    if (i > j)
      return {Partial{}};
    std::vector<Partial> out;
    if (best[i + 1][j] == best[i][j])
      out = self(self, i + 1, j);
    for (std::size_t k = i + 1; k <= j; ++k) {
      if (!pairable(i, k) || 1 + best[i + 1][k - 1] + best[k + 1][j] != best[i][j])
        continue;
      auto inner = self(self, i + 1, k - 1);
      auto outer = self(self, k + 1, j);
      for (const auto& a : inner)
        for (const auto& b : outer) {
          Partial p{Pair{i, k}};
          p.insert(p.end(), a.begin(), a.end());
          p.insert(p.end(), b.begin(), b.end());
          out.push_back(std::move(p));
        }
    }
    return out;
  };
  for (auto& arcs : all(all, 1, n)) {
    sort_pairs(arcs);
    r.witnesses.push_back(SecondaryStructure{w, std::move(arcs)});
  }
  std::sort(r.witnesses.begin(), r.witnesses.end(),
            [](const SecondaryStructure& a, const SecondaryStructure& b) { return a.arcs < b.arcs; });
  return r;
}

} // namespace dnacat
#endif
