// Pregroup types, contraction search, and the monoidal functor that sends
// grammatical reductions to Watson-Crick pairing.

#ifndef DNACAT_PREGROUP_HPP_
#define DNACAT_PREGROUP_HPP_

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "diagram.hpp"
#include "structures.hpp"

namespace dnacat {

/// a^z: z = 0 plain, -1 left adjoint, +1 right adjoint, iterated beyond.
struct SimpleTerm {
  std::string basic;
  int adjoint = 0;
  friend bool operator==(const SimpleTerm&, const SimpleTerm&) = default;
};

struct PregroupType {
  std::vector<SimpleTerm> terms;  // empty = unit
  friend bool operator==(const PregroupType&, const PregroupType&) = default;
};

/// "n^r s n^l", "n^ll", "1" (unit) or "" (unit).
inline PregroupType parse_type(std::string_view text) {
  PregroupType t;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1")
      continue;
    SimpleTerm term;
    auto caret = tok.find('^');
    term.basic = tok.substr(0, caret);
    if (term.basic.empty())
      fail("type term '" + tok + "' has no basic type");
    if (caret != std::string::npos) {
      std::string adj = tok.substr(caret + 1);
      if (adj.empty() || (adj.find_first_not_of('l') != std::string::npos &&
                          adj.find_first_not_of('r') != std::string::npos))
        fail("bad adjoint suffix in type term '" + tok + "' (use ^l, ^r, ^ll, ^rr, ...)");
      term.adjoint = static_cast<int>(adj.size()) * (adj[0] == 'l' ? -1 : 1);
    }
    t.terms.push_back(std::move(term));
  }
  return t;
}

inline std::string to_string(const SimpleTerm& s) {
  if (s.adjoint == 0)
    return s.basic;
  return s.basic + "^" + std::string(static_cast<std::size_t>(std::abs(s.adjoint)),
                                     s.adjoint < 0 ? 'l' : 'r');
}

inline std::string to_string(const PregroupType& t) {
  if (t.terms.empty())
    return "1";
  std::string out;
  for (const auto& s : t.terms) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

inline PregroupType flatten(const std::vector<PregroupType>& ts) {
  PregroupType out;
  for (const auto& t : ts)
    out.terms.insert(out.terms.end(), t.terms.begin(), t.terms.end());
  return out;
}

/// Links over the flattened term sequence (1-based), plus survivors in order.
struct ReductionProof {
  PairList links;
  std::vector<std::size_t> survivors;
  friend bool operator==(const ReductionProof&, const ReductionProof&) = default;
};

/// a^z followed by a^(z+1) contracts to 1: a a^r <= 1 and a^l a <= 1.
inline bool contracts(const SimpleTerm& left, const SimpleTerm& right) {
  return left.basic == right.basic && right.adjoint == left.adjoint + 1;
}

/// Checks a proof against the flattened terms and the goal; returns the
/// first problem, or nothing if the proof is sound.
inline std::optional<std::string> proof_problem(const ReductionProof& proof,
                                                const PregroupType& flat,
                                                const PregroupType& goal) {
  const std::size_t n = flat.terms.size();
  std::vector<int> role(n + 1, 0);  // 1 linked, 2 survivor
  for (const Pair& l : proof.links) {
    if (l.i == 0 || l.j > n || l.i >= l.j)
      return "link out of range";
    if (role[l.i] || role[l.j])
      return "term used twice";
    role[l.i] = role[l.j] = 1;
    if (!contracts(flat.terms[l.i - 1], flat.terms[l.j - 1]))
      return "link (" + std::to_string(l.i) + "," + std::to_string(l.j) + ") does not contract";
  }
  for (const Pair& a : proof.links)
    for (const Pair& b : proof.links)
      if (a.i < b.i && b.i < a.j && a.j < b.j)
        return "links cross";
  for (std::size_t s : proof.survivors) {
    if (s == 0 || s > n || role[s])
      return "bad survivor index";
    role[s] = 2;
    for (const Pair& l : proof.links)
      if (l.i < s && s < l.j)
        return "survivor " + std::to_string(s) + " lies under a link";
  }
  for (std::size_t k = 1; k <= n; ++k)
    if (!role[k])
      return "term " + std::to_string(k) + " neither linked nor surviving";
  if (proof.survivors.size() != goal.terms.size())
    return "survivors do not spell the goal";
  for (std::size_t k = 0; k < goal.terms.size(); ++k) {
    if (k && proof.survivors[k] <= proof.survivors[k - 1])
      return "survivors out of order";
    if (!(flat.terms[proof.survivors[k] - 1] == goal.terms[k]))
      return "survivors do not spell the goal";
  }
  return std::nullopt;
}

namespace detail {

// Contraction-only proof search over the flattened terms.
class ProofSearch {
public:
  ProofSearch(const PregroupType& flat, const PregroupType& goal)
      : t_(flat.terms), g_(goal.terms), n_(t_.size()) {
    // empty_[i][j]: terms i..j (1-based) contract away completely.
    empty_.assign(n_ + 2, std::vector<char>(n_ + 2, 0));
    for (std::size_t i = 1; i <= n_ + 1; ++i)
      empty_[i][i - 1] = 1;
    for (std::size_t len = 2; len <= n_; len += 2)
      for (std::size_t i = 1; i + len - 1 <= n_; ++i) {
        std::size_t j = i + len - 1;
        for (std::size_t k = i + 1; k <= j && !empty_[i][j]; k += 2)
          if (contracts(t_[i - 1], t_[k - 1]) && empty_[i + 1][k - 1] && empty_[k + 1][j])
            empty_[i][j] = 1;
      }
    // feasible_[i][g]: terms i..n reduce to goal terms g..end.
    const std::size_t m = g_.size();
    feasible_.assign(n_ + 2, std::vector<char>(m + 2, 0));
    feasible_[n_ + 1][m] = 1;
    for (std::size_t i = n_; i >= 1; --i)
      for (std::size_t g = 0; g <= m; ++g) {
        bool ok = g < m && t_[i - 1] == g_[g] && feasible_[i + 1][g + 1];
        for (std::size_t k = i + 1; k <= n_ && !ok; k += 2)
          ok = contracts(t_[i - 1], t_[k - 1]) && empty_[i + 1][k - 1] && feasible_[k + 1][g];
        feasible_[i][g] = ok;
      }
  }

  bool grammatical() const { return feasible_[1][0]; }

  /// Proofs in canonical order (nearest link partner first, survivor last).
  std::vector<ReductionProof> proofs(std::size_t limit) {
    std::vector<ReductionProof> out;
    if (!grammatical() || limit == 0)
      return out;
    ReductionProof cur;
    tail(1, 0, cur, out, limit);
    return out;
  }

private:
  void tail(std::size_t i, std::size_t g, ReductionProof& cur, std::vector<ReductionProof>& out,
            std::size_t limit) {
    if (out.size() >= limit)
      return;
    if (i == n_ + 1) {
      ReductionProof p = cur;
      sort_pairs(p.links);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t k = i + 1; k <= n_; k += 2) {
      if (!contracts(t_[i - 1], t_[k - 1]) || !empty_[i + 1][k - 1] || !feasible_[k + 1][g])
        continue;
      cur.links.push_back({i, k});
      inner(i + 1, k - 1, [&] { tail(k + 1, g, cur, out, limit); }, cur, out, limit);
      cur.links.pop_back();
    }
    if (g < g_.size() && t_[i - 1] == g_[g] && feasible_[i + 1][g + 1]) {
      cur.survivors.push_back(i);
      tail(i + 1, g + 1, cur, out, limit);
      cur.survivors.pop_back();
    }
  }

  // Enumerates full contractions of i..j, calling `done` for each.
  void inner(std::size_t i, std::size_t j, const std::function<void()>& done, ReductionProof& cur,
             std::vector<ReductionProof>& out, std::size_t limit) {
    if (out.size() >= limit)
      return;
    if (i > j) {
      done();
      return;
    }
    for (std::size_t k = i + 1; k <= j; k += 2) {
      if (!contracts(t_[i - 1], t_[k - 1]) || !empty_[i + 1][k - 1] || !empty_[k + 1][j])
        continue;
      cur.links.push_back({i, k});
      inner(i + 1, k - 1, [&] { inner(k + 1, j, done, cur, out, limit); }, cur, out, limit);
      cur.links.pop_back();
    }
  }

  const std::vector<SimpleTerm>& t_;
  const std::vector<SimpleTerm>& g_;
  std::size_t n_;
  std::vector<std::vector<char>> empty_;
  std::vector<std::vector<char>> feasible_;
};

} // namespace detail

/// Canonical contraction proof that `ts` reduces to `goal`, if any.
inline std::optional<ReductionProof> reduce(const std::vector<PregroupType>& ts,
                                            const PregroupType& goal) {
  PregroupType flat = flatten(ts);
  detail::ProofSearch search(flat, goal);
  auto p = search.proofs(1);
  if (p.empty())
    return std::nullopt;
  return p.front();
}

inline std::vector<ReductionProof> reduce_all(const std::vector<PregroupType>& ts,
                                              const PregroupType& goal,
                                              std::size_t limit = 1000) {
  PregroupType flat = flatten(ts);
  detail::ProofSearch search(flat, goal);
  return search.proofs(limit);
}

struct LexEntry {
  PregroupType type;
  SecondaryStructure structure;
};

struct Lexicon {
  std::map<std::string, Word> assignments;  // basic type -> F(basic)
  std::map<std::string, LexEntry> entries;  // vocabulary word -> state
  FoldConfig fold;
};

/// F(a^z) is F(a) for even z and its reverse complement for odd z.
inline Word functor_object(const SimpleTerm& s, const Lexicon& lex) {
  auto it = lex.assignments.find(s.basic);
  if (it == lex.assignments.end())
    fail("unknown basic type '" + s.basic + "'");
  return s.adjoint % 2 == 0 ? it->second : reverse_complement(it->second);
}

inline Word functor_object(const PregroupType& t, const Lexicon& lex) {
  Word w;
  for (const auto& s : t.terms)
    w = w + functor_object(s, lex);
  return w;
}

/// The diagram F(flatten(ts)) -> F(goal): an ev block per link and
/// identity wires per survivor.
inline Diagram functor_reduction(const ReductionProof& proof, const std::vector<PregroupType>& ts,
                                 const Lexicon& lex) {
  PregroupType flat = flatten(ts);
  const std::size_t n = flat.terms.size();
  std::vector<Word> blocks;
  std::vector<std::size_t> offset(n + 1, 0);  // offset[k]: bases before term k
  Word source;
  for (std::size_t k = 1; k <= n; ++k) {
    offset[k] = source.size();
    blocks.push_back(functor_object(flat.terms[k - 1], lex));
    source = source + blocks.back();
  }
  Diagram d{source, Word{}, {}, {}, {}};
  for (const Pair& l : proof.links) {
    const Word& a = blocks[l.i - 1];
    const Word& b = blocks[l.j - 1];
    if (a.size() != b.size())
      fail("functor images of linked terms differ in length");
    const std::size_t len = a.size();
    for (std::size_t i = 1; i <= len; ++i)
      d.source_arcs.push_back({offset[l.i] + i, offset[l.j] + len + 1 - i});
  }
  for (std::size_t s : proof.survivors) {
    const Word& b = blocks[s - 1];
    const std::size_t base = d.target.size();
    for (std::size_t i = 1; i <= b.size(); ++i)
      d.through.push_back({offset[s] + i, base + i});
    d.target = d.target + b;
  }
  d.canonicalize();
  return d;
}

struct Meaning {
  ReductionProof proof;
  SecondaryStructure structure;  // on F(goal)
  LoopReport report;
};

namespace detail {

inline std::vector<PregroupType> sentence_types(const std::vector<std::string>& sentence,
                                                const Lexicon& lex) {
  std::vector<PregroupType> ts;
  for (const auto& w : sentence) {
    auto it = lex.entries.find(w);
    if (it == lex.entries.end())
      fail("unknown word '" + w + "'");
    ts.push_back(it->second.type);
  }
  return ts;
}

inline Meaning meaning_for(const ReductionProof& proof, const std::vector<std::string>& sentence,
                           const std::vector<PregroupType>& ts, const Lexicon& lex) {
  Diagram states{Word{}, Word{}, {}, {}, {}};
  for (const auto& w : sentence) {
    const auto& s = lex.entries.at(w).structure;
    states = tensor(states, unbend(s, 0));
  }
  auto c = compose(states, functor_reduction(proof, ts, lex));
  return Meaning{proof, bend(c.diagram), c.report};
}

} // namespace detail

/// Sentence meaning: lexical states tensored, then the reduction diagram,
/// read as a structure on F(goal). Nothing if the sentence does not reduce.
inline std::optional<Meaning> meaning(const std::vector<std::string>& sentence,
                                      const PregroupType& goal, const Lexicon& lex) {
  auto ts = detail::sentence_types(sentence, lex);
  auto proof = reduce(ts, goal);
  if (!proof)
    return std::nullopt;
  return detail::meaning_for(*proof, sentence, ts, lex);
}

/// One meaning per distinct proof, in canonical proof order.
inline std::vector<Meaning> meanings_all(const std::vector<std::string>& sentence,
                                         const PregroupType& goal, const Lexicon& lex,
                                         std::size_t limit = 1000) {
  auto ts = detail::sentence_types(sentence, lex);
  std::vector<Meaning> out;
  for (const auto& p : reduce_all(ts, goal, limit))
    out.push_back(detail::meaning_for(p, sentence, ts, lex));
  return out;
}

/// Validates and inserts an entry; the structure is given as a bracket line
/// over F(type).
inline void add_entry(Lexicon& lex, const std::string& word, const PregroupType& type,
                      std::string_view brackets) {
  Word image = functor_object(type, lex);
  SecondaryStructure s;
  try {
    s = parse_dotbracket(image.str(), brackets);
  } catch (const Error& e) {
    fail("lexicon entry '" + word + "': " + e.what());
  }
  if (!is_member(s, lex.fold))
    fail("lexicon entry '" + word + "': structure violates min loop " +
         std::to_string(lex.fold.min_loop));
  lex.entries[word] = LexEntry{type, std::move(s)};
}

/// {"types": {basic: sequence}, "theta": k, "entries": {word: {"type": ..., "structure": ...}}}
inline Lexicon parse_lexicon(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("lexicon: ") + e.what());
  }
  Lexicon lex;
  try {
    for (auto& [k, v] : j.at("types").items())
      lex.assignments[k] = Word::parse(v.get<std::string>());
    if (j.contains("theta")) {
      long long theta = j.at("theta").get<long long>();
      if (theta < 0)
        fail("lexicon: theta must be >= 0");
      lex.fold.min_loop = static_cast<std::size_t>(theta);
    }
    for (auto& [word, e] : j.at("entries").items())
      add_entry(lex, word, parse_type(e.at("type").get<std::string>()),
                e.at("structure").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("lexicon: ") + e.what());
  }
  return lex;
}

} // namespace dnacat
#endif
