// Alphabet, words, Watson-Crick complementation and dot-bracket text.
//
// Positions are 1-based everywhere a pair (i,j) is visible to the caller.

#ifndef DNACAT_CORE_HPP_
#define DNACAT_CORE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dnacat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

enum class Base : char { A = 'A', C = 'C', G = 'G', T = 'T' };

constexpr Base complement(Base b) noexcept {
  switch (b) {
    case Base::A: return Base::T;
    case Base::T: return Base::A;
    case Base::C: return Base::G;
    case Base::G: return Base::C;
  }
  return b;
}

constexpr bool is_complementary(Base a, Base b) noexcept { return complement(a) == b; }

constexpr char to_char(Base b) noexcept { return static_cast<char>(b); }

// True for A and T, i.e. the red pair class.
constexpr bool is_weak(Base b) noexcept { return b == Base::A || b == Base::T; }

inline Base base_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Base::A;
    case 'C': case 'c': return Base::C;
    case 'G': case 'g': return Base::G;
    case 'T': case 't': return Base::T;
  }
  fail(std::string("invalid base '") + c + "' (alphabet is A, C, G, T)");
}

/// A strand read 5' to 3'. The empty word is the monoidal unit.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Base> bases) : bases_(bases) {}
  explicit Word(std::vector<Base> bases) : bases_(std::move(bases)) {}

  /// Case-insensitive; anything outside {A,C,G,T} throws.
  static Word parse(std::string_view text) {
    std::vector<Base> v;
    v.reserve(text.size());
    for (char c : text)
      v.push_back(base_from_char(c));
    return Word(std::move(v));
  }

  std::size_t size() const noexcept { return bases_.size(); }
  bool empty() const noexcept { return bases_.empty(); }

  /// 1-based access.
  Base at(std::size_t pos) const {
    if (pos == 0 || pos > bases_.size())
      fail("position " + std::to_string(pos) + " out of range 1.." +
           std::to_string(bases_.size()));
    return bases_[pos - 1];
  }

  const std::vector<Base>& bases() const noexcept { return bases_; }
  auto begin() const noexcept { return bases_.begin(); }
  auto end() const noexcept { return bases_.end(); }

  /// Subword of `len` bases starting at 1-based `pos`.
  Word slice(std::size_t pos, std::size_t len) const {
    if (pos == 0 || pos - 1 + len > bases_.size())
      fail("slice out of range");
    return Word(std::vector<Base>(bases_.begin() + (pos - 1),
                                  bases_.begin() + (pos - 1 + len)));
  }

  bool starts_with(const Word& w) const {
    return w.size() <= size() && std::equal(w.begin(), w.end(), begin());
  }
  bool ends_with(const Word& w) const {
    return w.size() <= size() && std::equal(w.begin(), w.end(), end() - w.size());
  }

  std::string str() const {
    std::string s;
    s.reserve(bases_.size());
    for (Base b : bases_)
      s += to_char(b);
    return s;
  }

  friend Word operator+(const Word& a, const Word& b) {
    std::vector<Base> v = a.bases_;
    v.insert(v.end(), b.bases_.begin(), b.bases_.end());
    return Word(std::move(v));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Base> bases_;
};

inline Word reverse_complement(const Word& w) {
  std::vector<Base> v;
  v.reserve(w.size());
  for (auto it = w.bases().rbegin(); it != w.bases().rend(); ++it)
    v.push_back(complement(*it));
  return Word(std::move(v));
}

/// An index pair (i,j), 1-based. Arcs keep i < j; through-wires store
/// (source index, target index).
struct Pair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

using PairList = std::vector<Pair>;

inline void sort_pairs(PairList& v) { std::sort(v.begin(), v.end()); }

/// A set of base pairs on one word. Generalized element epsilon -> word.
/// Arcs are kept sorted; the struct itself does not enforce validity,
/// use structure_violations() or make_structure().
struct SecondaryStructure {
  Word word;
  PairList arcs;

  friend bool operator==(const SecondaryStructure&, const SecondaryStructure&) = default;
};

/// Human-readable problems with `s`; empty iff it is a valid secondary
/// structure (in range, i<j, degree <= 1, noncrossing, complementary).
inline std::vector<std::string> structure_violations(const SecondaryStructure& s) {
  std::vector<std::string> out;
  const std::size_t n = s.word.size();
  auto pair_str = [](const Pair& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  };
  std::vector<int> used(n + 1, 0);
  std::vector<const Pair*> ok;
  for (const Pair& p : s.arcs) {
    if (p.i == 0 || p.j > n || p.i >= p.j) {
      out.push_back("arc " + pair_str(p) + " out of range or not i<j");
      continue;
    }
    if (!is_complementary(s.word.at(p.i), s.word.at(p.j)))
      out.push_back(std::string("arc ") + pair_str(p) + " pairs " +
                    to_char(s.word.at(p.i)) + "-" + to_char(s.word.at(p.j)) +
                    ", not Watson-Crick complementary");
    for (std::size_t k : {p.i, p.j})
      if (used[k]++ == 1)
        out.push_back("position " + std::to_string(k) + " is in more than one arc");
    ok.push_back(&p);
  }
  for (std::size_t a = 0; a < ok.size(); ++a)
    for (std::size_t b = 0; b < ok.size(); ++b) {
      const Pair& p = *ok[a];
      const Pair& q = *ok[b];
      if (p.i < q.i && q.i < p.j && p.j < q.j)
        out.push_back("arcs " + pair_str(p) + " and " + pair_str(q) + " cross");
    }
  return out;
}

inline bool is_valid(const SecondaryStructure& s) { return structure_violations(s).empty(); }

/// Sorts arcs and throws on the first violation.
inline SecondaryStructure make_structure(Word w, PairList arcs) {
  sort_pairs(arcs);
  SecondaryStructure s{std::move(w), std::move(arcs)};
  auto v = structure_violations(s);
  if (!v.empty())
    fail("invalid secondary structure: " + v.front());
  return s;
}

// ---- dot-bracket ----

/// Bracket line -> arc list, checking only syntax (characters and balance).
inline PairList parse_brackets(std::string_view brackets) {
  PairList arcs;
  std::vector<std::size_t> stack;
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    char c = brackets[k];
    if (c == '(') {
      stack.push_back(k + 1);
    } else if (c == ')') {
      if (stack.empty())
        fail("unbalanced brackets: unmatched ')' at position " + std::to_string(k + 1));
      arcs.push_back({stack.back(), k + 1});
      stack.pop_back();
    } else if (c != '.') {
      fail(std::string("unexpected character '") + c + "' in bracket line");
    }
  }
  if (!stack.empty())
    fail("unbalanced brackets: unmatched '(' at position " + std::to_string(stack.back()));
  sort_pairs(arcs);
  return arcs;
}

inline SecondaryStructure parse_dotbracket(std::string_view sequence, std::string_view brackets) {
  Word w = Word::parse(sequence);
  if (w.size() != brackets.size())
    fail("length mismatch: sequence has " + std::to_string(w.size()) +
         " bases, bracket line has " + std::to_string(brackets.size()));
  return make_structure(std::move(w), parse_brackets(brackets));
}

/// Splits a two-line document (sequence, brackets); a trailing LF is optional.
inline std::pair<std::string, std::string> split_dotbracket_text(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty())
    lines.push_back(cur);
  while (lines.size() > 2 && lines.back().empty())
    lines.pop_back();
  if (lines.size() == 1)
    lines.emplace_back();
  if (lines.size() != 2)
    fail("dot-bracket text must have exactly two lines (sequence, brackets)");
  return {lines[0], lines[1]};
}

inline SecondaryStructure parse_dotbracket(std::string_view text) {
  auto [seq, br] = split_dotbracket_text(text);
  return parse_dotbracket(seq, br);
}

inline std::string bracket_line(const SecondaryStructure& s) {
  std::string br(s.word.size(), '.');
  for (const Pair& p : s.arcs) {
    br[p.i - 1] = '(';
    br[p.j - 1] = ')';
  }
  return br;
}

/// "SEQUENCE\nBRACKETS\n"
inline std::string emit_dotbracket(const SecondaryStructure& s) {
  return s.word.str() + "\n" + bracket_line(s) + "\n";
}

} // namespace dnacat
#endif
