// Arc-view rendering of structures and diagrams: SVG and plain text.

#ifndef DNACAT_RENDER_HPP_
#define DNACAT_RENDER_HPP_

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "core.hpp"
#include "diagram.hpp"

namespace dnacat {

struct RenderStyle {
  std::string at_color = "#d62728";  // red
  std::string cg_color = "#1f77b4";  // blue
  double spacing = 24;
  double arc_increment = 14;
  bool show_direction_arrows = false;
};

inline void check_style(const RenderStyle& st) {
  if (!(st.spacing > 0) || !(st.arc_increment > 0))
    fail("render style: spacing and arc increment must be positive");
}

/// Nesting level per arc: 1 for an arc with nothing inside, otherwise one
/// more than the highest arc it encloses. Arcs must be noncrossing.
inline std::vector<std::size_t> arc_levels(const PairList& arcs) {
  std::vector<std::size_t> level(arcs.size(), 1);
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return arcs[a].j - arcs[a].i < arcs[b].j - arcs[b].i;
  });
  for (std::size_t a : order)
    for (std::size_t b : order)
      if (arcs[a].i < arcs[b].i && arcs[b].j < arcs[a].j)
        level[a] = std::max(level[a], level[b] + 1);
  return level;
}

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

inline const std::string& pair_color(Base b, const RenderStyle& st) {
  return is_weak(b) ? st.at_color : st.cg_color;
}

inline std::string svg_header(double w, double h, const RenderStyle& st) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                    num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " +
                    num(h) + "\">\n";
  if (st.show_direction_arrows)
    out += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" "
           "markerWidth=\"5\" markerHeight=\"5\" orient=\"auto\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555555\"/></marker></defs>\n";
  return out;
}

inline std::string glyph(double x, double y, Base b, std::size_t pos, const char* row) {
  return "<text class=\"base\" data-row=\"" + std::string(row) + "\" data-pos=\"" +
         std::to_string(pos) + "\" x=\"" + num(x) + "\" y=\"" + num(y) +
         "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"monospace\" "
         "font-size=\"14\">" + std::string(1, to_char(b)) + "</text>\n";
}

} // namespace detail

/// Bases on a line, arcs as half-ellipses above it; arc height is the
/// nesting level times the increment.
inline std::string render_structure_svg(const SecondaryStructure& s, const RenderStyle& st = {}) {
  check_style(st);
  using detail::num;
  auto levels = arc_levels(s.arcs);
  std::size_t top = 0;
  for (auto l : levels) top = std::max(top, l);
  const double margin = st.spacing;
  const double base_y = margin + top * st.arc_increment + 10;
  const double anchor_y = base_y - 10;
  const double width = 2 * margin + (s.word.empty() ? 0 : (s.word.size() - 1) * st.spacing);
  const double height = base_y + margin;
  auto xpos = [&](std::size_t i) { return margin + (i - 1) * st.spacing; };

  std::string out = detail::svg_header(width, height, st);
  for (std::size_t k = 0; k < s.arcs.size(); ++k) {
    const Pair& p = s.arcs[k];
    const double x1 = xpos(p.i), x2 = xpos(p.j);
    out += "<path class=\"arc\" data-i=\"" + std::to_string(p.i) + "\" data-j=\"" +
           std::to_string(p.j) + "\" d=\"M " + num(x1) + " " + num(anchor_y) + " A " +
           num((x2 - x1) / 2) + " " + num(levels[k] * st.arc_increment) + " 0 0 1 " + num(x2) +
           " " + num(anchor_y) + "\" fill=\"none\" stroke=\"" +
           detail::pair_color(s.word.at(p.i), st) + "\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t i = 1; i <= s.word.size(); ++i)
    out += detail::glyph(xpos(i), base_y, s.word.at(i), i, "seq");
  out += "</svg>\n";
  return out;
}

/// Source row on top, target row below. Source arcs hang down from the top
/// row, target arcs rise from the bottom row, through-wires are cubic curves.
inline std::string render_diagram_svg(const Diagram& d, const RenderStyle& st = {}) {
  check_style(st);
  using detail::num;
  auto src_levels = arc_levels(d.source_arcs);
  auto tgt_levels = arc_levels(d.target_arcs);
  std::size_t top_src = 0, top_tgt = 0;
  for (auto l : src_levels) top_src = std::max(top_src, l);
  for (auto l : tgt_levels) top_tgt = std::max(top_tgt, l);
  const double margin = st.spacing;
  const double gap = std::max<double>(3 * st.spacing, (top_src + top_tgt + 2) * st.arc_increment);
  const double src_y = margin;
  const double tgt_y = src_y + 20 + gap;
  const double src_anchor = src_y + 10, tgt_anchor = tgt_y - 10;
  const std::size_t cols = std::max(d.source.size(), d.target.size());
  const double width = 2 * margin + (cols ? (cols - 1) * st.spacing : 0);
  const double height = tgt_y + margin;
  auto xpos = [&](std::size_t i) { return margin + (i - 1) * st.spacing; };
  const char* marker = st.show_direction_arrows ? " marker-mid=\"url(#arrow)\"" : "";

  std::string out = detail::svg_header(width, height, st);
  for (const Pair& t : d.through) {
    const Base b = d.source.at(t.i);
    const double xs = xpos(t.i), xt = xpos(t.j), ym = (src_anchor + tgt_anchor) / 2;
    // A and C run downward, T and G upward.
    const bool down = b == Base::A || b == Base::C;
    std::string path = down
        ? "M " + num(xs) + " " + num(src_anchor) + " C " + num(xs) + " " + num(ym) + " " +
              num(xt) + " " + num(ym) + " " + num(xt) + " " + num(tgt_anchor)
        : "M " + num(xt) + " " + num(tgt_anchor) + " C " + num(xt) + " " + num(ym) + " " +
              num(xs) + " " + num(ym) + " " + num(xs) + " " + num(src_anchor);
    if (st.show_direction_arrows) {
      // split at the midpoint so marker-mid lands on the wire
      const double xm = (xs + xt) / 2;
      path = down
          ? "M " + num(xs) + " " + num(src_anchor) + " Q " + num(xs) + " " + num(ym) + " " +
                num(xm) + " " + num(ym) + " Q " + num(xt) + " " + num(ym) + " " + num(xt) + " " +
                num(tgt_anchor)
          : "M " + num(xt) + " " + num(tgt_anchor) + " Q " + num(xt) + " " + num(ym) + " " +
                num(xm) + " " + num(ym) + " Q " + num(xs) + " " + num(ym) + " " + num(xs) + " " +
                num(src_anchor);
    }
    out += "<path class=\"wire\" data-i=\"" + std::to_string(t.i) + "\" data-j=\"" +
           std::to_string(t.j) + "\" d=\"" + path + "\" fill=\"none\" stroke=\"" +
           detail::pair_color(b, st) + "\" stroke-width=\"2\"" + marker + "/>\n";
  }
  auto arcs = [&](const PairList& v, const std::vector<std::size_t>& lv, const Word& w,
                  double y, int sweep, const char* cls) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Pair& p = v[k];
      const double x1 = xpos(p.i), x2 = xpos(p.j);
      out += "<path class=\"" + std::string(cls) + "\" data-i=\"" + std::to_string(p.i) +
             "\" data-j=\"" + std::to_string(p.j) + "\" d=\"M " + num(x1) + " " + num(y) +
             " A " + num((x2 - x1) / 2) + " " + num(lv[k] * st.arc_increment) + " 0 0 " +
             std::to_string(sweep) + " " + num(x2) + " " + num(y) +
             "\" fill=\"none\" stroke=\"" + detail::pair_color(w.at(p.i), st) +
             "\" stroke-width=\"2\"/>\n";
    }
  };
  arcs(d.source_arcs, src_levels, d.source, src_anchor, 0, "source-arc");
  arcs(d.target_arcs, tgt_levels, d.target, tgt_anchor, 1, "target-arc");
  for (std::size_t i = 1; i <= d.source.size(); ++i)
    out += detail::glyph(xpos(i), src_y, d.source.at(i), i, "source");
  for (std::size_t j = 1; j <= d.target.size(); ++j)
    out += detail::glyph(xpos(j), tgt_y, d.target.at(j), j, "target");
  out += "</svg>\n";
  return out;
}

/// Sequence line, bracket line, then one sketch row per nesting level
/// (outermost first):
///
///   ACGTAGGGTACGT
///   (((((...)))))
///   +-----------+
///   |+---------+|
///   ...
inline std::string render_structure_text(const SecondaryStructure& s) {
  std::string out = s.word.str() + "\n" + bracket_line(s) + "\n";
  auto levels = arc_levels(s.arcs);
  std::size_t top = 0;
  for (auto l : levels) top = std::max(top, l);
  for (std::size_t row = top; row >= 1; --row) {
    std::string line(s.word.size(), ' ');
    for (std::size_t k = 0; k < s.arcs.size(); ++k) {
      const Pair& p = s.arcs[k];
      if (levels[k] == row) {
        for (std::size_t x = p.i; x < p.j - 1; ++x) line[x] = '-';
        line[p.i - 1] = line[p.j - 1] = '+';
      } else if (levels[k] > row) {
        line[p.i - 1] = line[p.j - 1] = '|';
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

} // namespace dnacat
#endif
