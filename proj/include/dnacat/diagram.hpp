// Morphisms of the DNA diagram category: typed noncrossing partial
// matchings between a source word (top boundary) and a target word
// (bottom boundary).

#ifndef DNACAT_DIAGRAM_HPP_
#define DNACAT_DIAGRAM_HPP_

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace dnacat {

struct Diagram {
  Word source;
  Word target;
  PairList through;      // (source index, target index)
  PairList source_arcs;  // i < j, both on source
  PairList target_arcs;  // i < j, both on target

  void canonicalize() {
    sort_pairs(through);
    sort_pairs(source_arcs);
    sort_pairs(target_arcs);
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

enum class ViolationKind {
  OutOfRange,
  Degree,
  ThroughTyping,
  ArcTyping,
  ThroughCrossing,
  ArcWireCrossing,
  ArcCrossing,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::OutOfRange: return "out-of-range";
    case ViolationKind::Degree: return "degree";
    case ViolationKind::ThroughTyping: return "through-typing";
    case ViolationKind::ArcTyping: return "arc-typing";
    case ViolationKind::ThroughCrossing: return "through-crossing";
    case ViolationKind::ArcWireCrossing: return "arc-wire-crossing";
    case ViolationKind::ArcCrossing: return "arc-crossing";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string message;
};

namespace detail {

inline std::string pstr(const Pair& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

inline void check_arcs(const Word& w, const PairList& arcs, const PairList& through,
                       bool on_source, std::vector<int>& used,
                       std::vector<Violation>& out) {
  const char* side = on_source ? "source" : "target";
  PairList good;
  for (const Pair& p : arcs) {
    if (p.i == 0 || p.j > w.size() || p.i >= p.j) {
      out.push_back({ViolationKind::OutOfRange,
                     std::string(side) + " arc " + pstr(p) + " out of range or not i<j"});
      continue;
    }
    for (std::size_t k : {p.i, p.j})
      if (used[k]++ == 1)
        out.push_back({ViolationKind::Degree,
                       std::string(side) + " position " + std::to_string(k) +
                       " has more than one edge"});
    if (!is_complementary(w.at(p.i), w.at(p.j)))
      out.push_back({ViolationKind::ArcTyping,
                     std::string(side) + " arc " + pstr(p) + " pairs " +
                     to_char(w.at(p.i)) + "-" + to_char(w.at(p.j))});
    for (const Pair& t : through) {
      std::size_t k = on_source ? t.i : t.j;
      if (p.i < k && k < p.j)
        out.push_back({ViolationKind::ArcWireCrossing,
                       std::string(side) + " arc " + pstr(p) + " encloses through-wire " +
                       pstr(t)});
    }
    good.push_back(p);
  }
  for (const Pair& p : good)
    for (const Pair& q : good)
      if (p.i < q.i && q.i < p.j && p.j < q.j)
        out.push_back({ViolationKind::ArcCrossing,
                       std::string(side) + " arcs " + pstr(p) + " and " + pstr(q) + " cross"});
}

} // namespace detail

/// Every violated invariant of `d`; empty means valid.
inline std::vector<Violation> validate(const Diagram& d) {
  std::vector<Violation> out;
  std::vector<int> used_src(d.source.size() + 1, 0);
  std::vector<int> used_tgt(d.target.size() + 1, 0);
  PairList wires;
  for (const Pair& t : d.through) {
    if (t.i == 0 || t.i > d.source.size() || t.j == 0 || t.j > d.target.size()) {
      out.push_back({ViolationKind::OutOfRange, "through-wire " + detail::pstr(t) + " out of range"});
      continue;
    }
    if (used_src[t.i]++ == 1)
      out.push_back({ViolationKind::Degree,
                     "source position " + std::to_string(t.i) + " has more than one edge"});
    if (used_tgt[t.j]++ == 1)
      out.push_back({ViolationKind::Degree,
                     "target position " + std::to_string(t.j) + " has more than one edge"});
    if (d.source.at(t.i) != d.target.at(t.j))
      out.push_back({ViolationKind::ThroughTyping,
                     "through-wire " + detail::pstr(t) + " joins " + to_char(d.source.at(t.i)) +
                     " to " + to_char(d.target.at(t.j))});
    wires.push_back(t);
  }
  for (const Pair& a : wires)
    for (const Pair& b : wires)
      if (a.i < b.i && a.j > b.j)
        out.push_back({ViolationKind::ThroughCrossing,
                       "through-wires " + detail::pstr(a) + " and " + detail::pstr(b) + " cross"});
  detail::check_arcs(d.source, d.source_arcs, wires, true, used_src, out);
  detail::check_arcs(d.target, d.target_arcs, wires, false, used_tgt, out);
  return out;
}

inline bool is_valid(const Diagram& d) { return validate(d).empty(); }

/// Canonicalizes and validates; throws on the first violation.
inline Diagram make_diagram(Word source, Word target, PairList through,
                            PairList source_arcs, PairList target_arcs) {
  Diagram d{std::move(source), std::move(target), std::move(through),
            std::move(source_arcs), std::move(target_arcs)};
  d.canonicalize();
  auto v = validate(d);
  if (!v.empty())
    fail(std::string("invalid diagram (") + to_string(v.front().kind) + "): " + v.front().message);
  return d;
}

inline Diagram identity(const Word& w) {
  Diagram d{w, w, {}, {}, {}};
  for (std::size_t i = 1; i <= w.size(); ++i)
    d.through.push_back({i, i});
  return d;
}

/// Cup  w . w^v -> epsilon.
inline Diagram ev(const Word& w) {
  const std::size_t n = w.size();
  Diagram d{w + reverse_complement(w), Word{}, {}, {}, {}};
  for (std::size_t i = 1; i <= n; ++i)
    d.source_arcs.push_back({i, 2 * n + 1 - i});
  return d;
}

/// Cap  epsilon -> w^v . w.
inline Diagram coev(const Word& w) {
  const std::size_t n = w.size();
  Diagram d{Word{}, reverse_complement(w) + w, {}, {}, {}};
  for (std::size_t i = 1; i <= n; ++i)
    d.target_arcs.push_back({i, 2 * n + 1 - i});
  return d;
}

/// Horizontal juxtaposition, f on the left.
inline Diagram tensor(const Diagram& f, const Diagram& g) {
  const std::size_t ds = f.source.size();
  const std::size_t dt = f.target.size();
  Diagram d{f.source + g.source, f.target + g.target, f.through, f.source_arcs, f.target_arcs};
  for (const Pair& p : g.through)
    d.through.push_back({p.i + ds, p.j + dt});
  for (const Pair& p : g.source_arcs)
    d.source_arcs.push_back({p.i + ds, p.j + ds});
  for (const Pair& p : g.target_arcs)
    d.target_arcs.push_back({p.i + dt, p.j + dt});
  d.canonicalize();
  return d;
}

inline std::size_t bond_count(const Diagram& d) {
  return d.source_arcs.size() + d.target_arcs.size();
}
inline std::size_t bond_count(const SecondaryStructure& s) { return s.arcs.size(); }

/// What gluing erased or rewired. Only the diagram itself takes part in
/// equality; these counts are bookkeeping.
struct LoopReport {
  std::size_t closed_loops = 0;
  std::size_t closed_loops_at = 0;   // loops made of A/T bases
  std::size_t closed_loops_cg = 0;   // loops made of C/G bases
  std::size_t erased_open_paths = 0;
  std::size_t dangled_endpoints = 0;
  std::size_t interface_bonds_formed = 0;
  std::size_t bonds_before = 0;
  std::size_t bonds_after = 0;

  // Edge accounting. Every edge of the glued graph ends up in exactly one
  // of: a surviving composite edge, a merged interior edge of a transfer
  // path, a closed loop, an erased open path, or a dangling path.
  std::size_t closed_loop_edges = 0;
  std::size_t closed_loop_interface_bonds = 0;
  std::size_t erased_path_edges = 0;
  std::size_t dangled_path_edges = 0;
  std::size_t transfer_edges_merged = 0;

  /// Nothing was erased or left dangling.
  bool nothing_erased() const {
    return closed_loops == 0 && erased_open_paths == 0 && dangled_endpoints == 0;
  }

  bool same_loop_counts(const LoopReport& o) const {
    return closed_loops == o.closed_loops && closed_loops_at == o.closed_loops_at &&
           closed_loops_cg == o.closed_loops_cg && erased_open_paths == o.erased_open_paths &&
           dangled_endpoints == o.dangled_endpoints;
  }
};

namespace detail {

// Glued graph: every node has degree <= 2, boundary nodes degree <= 1.
struct GlueGraph {
  struct Edge {
    std::size_t a, b;
    bool interface;  // an ev-pair added by zipping
  };
  std::vector<bool> boundary;
  std::vector<bool> weak;  // A/T base at node
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> incident;

  std::size_t add_node(bool is_boundary, Base b) {
    boundary.push_back(is_boundary);
    weak.push_back(is_weak(b));
    incident.emplace_back();
    return boundary.size() - 1;
  }
  void add_edge(std::size_t a, std::size_t b, bool is_interface = false) {
    edges.push_back({a, b, is_interface});
    incident[a].push_back(edges.size() - 1);
    incident[b].push_back(edges.size() - 1);
  }
};

struct Traced {
  std::vector<std::pair<std::size_t, std::size_t>> composite;  // boundary node pairs
  LoopReport report;
};

// Walks every component and classifies it as a composite edge, a closed
// loop, an interior open path, or a dangling path.
inline Traced trace(const GlueGraph& g) {
  const std::size_t n = g.boundary.size();
  for (std::size_t v = 0; v < n; ++v)
    if (g.incident[v].size() > 2 || (g.boundary[v] && g.incident[v].size() > 1))
      fail("internal: glued graph degree bound violated");
  Traced out;
  LoopReport& r = out.report;
  std::vector<bool> seen_node(n, false);
  std::vector<bool> seen_edge(g.edges.size(), false);

  // Walk from an endpoint (degree <= 1) until the path ends.
  auto walk = [&](std::size_t start, std::size_t& edges, std::size_t& iface) {
    std::size_t v = start;
    seen_node[v] = true;
    edges = 0;
    iface = 0;
    for (;;) {
      std::size_t next_edge = SIZE_MAX;
      for (std::size_t e : g.incident[v])
        if (!seen_edge[e]) { next_edge = e; break; }
      if (next_edge == SIZE_MAX)
        return v;
      seen_edge[next_edge] = true;
      ++edges;
      if (g.edges[next_edge].interface)
        ++iface;
      const auto& e = g.edges[next_edge];
      v = e.a == v ? e.b : e.a;
      seen_node[v] = true;
    }
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (!g.boundary[v] || seen_node[v] || g.incident[v].empty())
      continue;
    std::size_t k = 0, iface = 0;
    std::size_t end = walk(v, k, iface);
    if (g.boundary[end]) {
      out.composite.emplace_back(v, end);
      r.transfer_edges_merged += k - 1;
    } else {
      ++r.dangled_endpoints;
      r.dangled_path_edges += k;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.boundary[v] || seen_node[v] || g.incident[v].size() == 2)
      continue;
    std::size_t k = 0, iface = 0;
    walk(v, k, iface);
    ++r.erased_open_paths;
    r.erased_path_edges += k;
  }
  // Whatever is left lies on a cycle; unmatched boundary nodes are not loops.
  for (std::size_t v = 0; v < n; ++v) {
    if (seen_node[v] || g.boundary[v])
      continue;
    std::size_t k = 0, iface = 0;
    walk(v, k, iface);
    ++r.closed_loops;
    (g.weak[v] ? r.closed_loops_at : r.closed_loops_cg)++;
    r.closed_loop_edges += k;
    r.closed_loop_interface_bonds += iface;
  }
  return out;
}

} // namespace detail

struct Composite {
  Diagram diagram;
  LoopReport report;
};

/// Vertical stacking g o f (f on top). Requires f.target == g.source.
inline Composite compose(const Diagram& f, const Diagram& g) {
  if (f.target != g.source)
    fail("interface mismatch: f targets " + (f.target.empty() ? std::string("-") : f.target.str()) +
         " but g starts from " + (g.source.empty() ? std::string("-") : g.source.str()));
  const Word& x = f.source;
  const Word& y = f.target;
  const Word& z = g.target;
  detail::GlueGraph gr;
  // node layout: x, then y, then z
  for (Base b : x) gr.add_node(true, b);
  for (Base b : y) gr.add_node(false, b);
  for (Base b : z) gr.add_node(true, b);
  const std::size_t ox = 0, oy = x.size(), oz = x.size() + y.size();
  for (const Pair& p : f.through) gr.add_edge(ox + p.i - 1, oy + p.j - 1);
  for (const Pair& p : f.source_arcs) gr.add_edge(ox + p.i - 1, ox + p.j - 1);
  for (const Pair& p : f.target_arcs) gr.add_edge(oy + p.i - 1, oy + p.j - 1);
  for (const Pair& p : g.through) gr.add_edge(oy + p.i - 1, oz + p.j - 1);
  for (const Pair& p : g.source_arcs) gr.add_edge(oy + p.i - 1, oy + p.j - 1);
  for (const Pair& p : g.target_arcs) gr.add_edge(oz + p.i - 1, oz + p.j - 1);

  auto traced = detail::trace(gr);
  Composite c{Diagram{x, z, {}, {}, {}}, traced.report};
  for (auto [a, b] : traced.composite) {
    if (a > b) std::swap(a, b);
    if (b < oy)
      c.diagram.source_arcs.push_back({a + 1, b + 1});
    else if (a >= oz)
      c.diagram.target_arcs.push_back({a - oz + 1, b - oz + 1});
    else
      c.diagram.through.push_back({a + 1, b - oz + 1});
  }
  c.diagram.canonicalize();
  c.report.bonds_before = bond_count(f) + bond_count(g);
  c.report.bonds_after = bond_count(c.diagram);
  return c;
}

/// Straightens f: x -> y into a structure on x^v . y.
inline SecondaryStructure bend(const Diagram& f) {
  const std::size_t nx = f.source.size();
  auto src = [nx](std::size_t i) { return nx + 1 - i; };
  auto tgt = [nx](std::size_t j) { return nx + j; };
  SecondaryStructure s{reverse_complement(f.source) + f.target, {}};
  for (const Pair& p : f.through) s.arcs.push_back({src(p.i), tgt(p.j)});
  for (const Pair& p : f.source_arcs) s.arcs.push_back({src(p.j), src(p.i)});
  for (const Pair& p : f.target_arcs) s.arcs.push_back({tgt(p.i), tgt(p.j)});
  sort_pairs(s.arcs);
  return s;
}

/// Inverse of bend: the first `source_length` bases of s.word are read as x^v.
inline Diagram unbend(const SecondaryStructure& s, std::size_t source_length) {
  const std::size_t k = source_length;
  if (k > s.word.size())
    fail("source length " + std::to_string(k) + " exceeds word length " +
         std::to_string(s.word.size()));
  Diagram d{reverse_complement(s.word.slice(1, k)), s.word.slice(k + 1, s.word.size() - k),
            {}, {}, {}};
  for (const Pair& p : s.arcs) {
    if (p.j <= k)
      d.source_arcs.push_back({k + 1 - p.j, k + 1 - p.i});
    else if (p.i > k)
      d.target_arcs.push_back({p.i - k, p.j - k});
    else
      d.through.push_back({k + 1 - p.i, p.j - k});
  }
  d.canonicalize();
  return d;
}

struct ZipResult {
  SecondaryStructure structure;
  LoopReport report;
};

/// Composition at the straightened level: juxtapose fhat (on x^v.y) and
/// ghat (on y^v.z), zip y against y^v with the ev pairs, and keep what
/// connects x^v and z.
inline ZipResult zip_and_transfer(const SecondaryStructure& fhat, const SecondaryStructure& ghat,
                                  const Word& y) {
  const Word yv = reverse_complement(y);
  if (!fhat.word.ends_with(y))
    fail("interface mismatch: left structure " + fhat.word.str() + " does not end with " + y.str());
  if (!ghat.word.starts_with(yv))
    fail("interface mismatch: right structure " + ghat.word.str() + " does not start with " +
         yv.str());
  const std::size_t m = y.size();
  const std::size_t nxv = fhat.word.size() - m;
  const std::size_t nz = ghat.word.size() - m;
  const std::size_t nf = fhat.word.size();

  detail::GlueGraph gr;
  // node layout: fhat positions, then ghat positions
  std::size_t pos = 0;
  for (Base b : fhat.word) gr.add_node(pos++ < nxv, b);
  pos = 0;
  for (Base b : ghat.word) gr.add_node(pos++ >= m, b);
  for (const Pair& p : fhat.arcs) gr.add_edge(p.i - 1, p.j - 1);
  for (const Pair& p : ghat.arcs) gr.add_edge(nf + p.i - 1, nf + p.j - 1);
  for (std::size_t i = 1; i <= m; ++i)
    gr.add_edge(nxv + i - 1, nf + (m + 1 - i) - 1, true);

  auto traced = detail::trace(gr);
  ZipResult r{SecondaryStructure{fhat.word.slice(1, nxv) + ghat.word.slice(m + 1, nz), {}},
              traced.report};
  auto result_pos = [&](std::size_t node) {
    return node < nxv ? node + 1 : nxv + (node - nf - m) + 1;
  };
  for (auto [a, b] : traced.composite) {
    std::size_t i = result_pos(a), j = result_pos(b);
    if (i > j) std::swap(i, j);
    r.structure.arcs.push_back({i, j});
  }
  sort_pairs(r.structure.arcs);
  r.report.interface_bonds_formed = m;
  r.report.bonds_before = bond_count(fhat) + bond_count(ghat);
  r.report.bonds_after = bond_count(r.structure);
  return r;
}

// ---- .ddna text format ----
//
//   line 1: source word ("-" for the empty word)
//   line 2: target word
//   then one edge per line: "T i j" through, "S i j" source arc,
//   "A i j" target arc. '#' starts a comment.

inline Diagram parse_ddna(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::string cur;
    std::size_t lineno = 1;
    auto flush = [&] {
      auto hash = cur.find('#');
      if (hash != std::string::npos) cur.erase(hash);
      auto b = cur.find_first_not_of(" \t\r");
      auto e = cur.find_last_not_of(" \t\r");
      if (b != std::string::npos)
        lines.emplace_back(lineno, cur.substr(b, e - b + 1));
      cur.clear();
      ++lineno;
    };
    for (char c : text) {
      if (c == '\n') flush();
      else cur += c;
    }
    if (!cur.empty()) flush();
  }
  if (lines.size() < 2)
    fail("ddna: expected source and target word lines");
  auto word = [](const std::string& s) { return s == "-" ? Word{} : Word::parse(s); };
  Diagram d{word(lines[0].second), word(lines[1].second), {}, {}, {}};
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const auto& [no, s] = lines[k];
    char kind = 0;
    long long i = 0, j = 0;
    char extra = 0;
    if (std::sscanf(s.c_str(), " %c %lld %lld %c", &kind, &i, &j, &extra) != 3 || i <= 0 || j <= 0)
      fail("ddna line " + std::to_string(no) + ": expected '<T|S|A> i j', got '" + s + "'");
    Pair p{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
    switch (kind) {
      case 'T': d.through.push_back(p); break;
      case 'S': d.source_arcs.push_back(p); break;
      case 'A': d.target_arcs.push_back(p); break;
      default:
        fail("ddna line " + std::to_string(no) + ": unknown edge kind '" + std::string(1, kind) + "'");
    }
  }
  d.canonicalize();
  return d;
}

inline std::string emit_ddna(const Diagram& d) {
  auto word = [](const Word& w) { return w.empty() ? std::string("-") : w.str(); };
  std::string out = word(d.source) + "\n" + word(d.target) + "\n";
  auto edges = [&out](char kind, PairList v) {
    sort_pairs(v);
    for (const Pair& p : v)
      out += kind + (" " + std::to_string(p.i) + " " + std::to_string(p.j) + "\n");
  };
  edges('T', d.through);
  edges('S', d.source_arcs);
  edges('A', d.target_arcs);
  return out;
}

} // namespace dnacat
#endif
