// dnacat: command-line front end for the DNA diagram library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnacat/dnacat.hpp"

using namespace dnacat;

namespace {

enum Exit { Ok = 0, Failed = 1, BadInput = 2 };

std::string read_input(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail("cannot write " + path);
  out << text;
}

bool is_ddna_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".ddna") == 0;
}

void print_report(const LoopReport& r) {
  std::cerr << "closed_loops " << r.closed_loops << " (AT " << r.closed_loops_at << ", CG "
            << r.closed_loops_cg << ")\n"
            << "erased_open_paths " << r.erased_open_paths << "\n"
            << "dangled_endpoints " << r.dangled_endpoints << "\n"
            << "interface_bonds_formed " << r.interface_bonds_formed << "\n"
            << "bonds_before " << r.bonds_before << "\n"
            << "bonds_after " << r.bonds_after << "\n";
}

std::size_t default_theta() {
  if (const char* env = std::getenv("DNACAT_THETA")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0)
      return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring invalid DNACAT_THETA='" << env << "'\n";
  }
  return 0;
}

struct CliConfig {
  std::size_t theta = default_theta();
  bool loop_report = false;
  bool all_proofs = false;
  std::string output_format = "svg";
  std::string output;
  RenderStyle style;
};

Diagram load_diagram(const std::string& path) {
  Diagram d = parse_ddna(read_input(path));
  auto v = validate(d);
  if (!v.empty())
    fail(path + ": invalid diagram (" + to_string(v.front().kind) + "): " + v.front().message);
  return d;
}

SecondaryStructure load_structure(const std::string& path) {
  return parse_dotbracket(read_input(path));
}

int cmd_validate(const std::string& path, const CliConfig& cfg) {
  std::vector<std::string> problems;
  const std::string text = read_input(path);
  if (is_ddna_path(path)) {
    for (const auto& v : validate(parse_ddna(text)))
      problems.push_back(std::string(to_string(v.kind)) + ": " + v.message);
  } else {
    auto [seq, br] = split_dotbracket_text(text);
    SecondaryStructure s{Word::parse(seq), parse_brackets(br)};
    if (s.word.size() != br.size())
      fail("length mismatch: sequence has " + std::to_string(s.word.size()) +
           " bases, bracket line has " + std::to_string(br.size()));
    problems = structure_violations(s);
    for (const Pair& p : s.arcs)
      if (p.j - p.i - 1 < cfg.theta)
        problems.push_back("arc (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                           ") encloses fewer than " + std::to_string(cfg.theta) + " positions");
  }
  if (problems.empty()) {
    std::cout << "ok\n";
    return Ok;
  }
  for (const auto& p : problems)
    std::cout << p << "\n";
  return Failed;
}

int cmd_compose(const std::string& fpath, const std::string& gpath, const CliConfig& cfg) {
  Diagram f = load_diagram(fpath);
  Diagram g = load_diagram(gpath);
  if (f.target != g.source) {
    auto show = [](const Word& w) { return w.empty() ? std::string("-") : w.str(); };
    std::cerr << "error: interface mismatch\n  f target: " << show(f.target)
              << "\n  g source: " << show(g.source) << "\n";
    return BadInput;
  }
  auto c = compose(f, g);
  write_output(cfg.output, emit_ddna(c.diagram));
  if (cfg.loop_report)
    print_report(c.report);
  return Ok;
}

int cmd_zip(const std::string& fpath, const std::string& gpath, const std::string& iface,
            const CliConfig& cfg) {
  auto z = zip_and_transfer(load_structure(fpath), load_structure(gpath), Word::parse(iface));
  write_output(cfg.output, emit_dotbracket(z.structure));
  if (cfg.loop_report)
    print_report(z.report);
  return Ok;
}

std::string proof_text(const ReductionProof& p) {
  std::string out = "links";
  for (const Pair& l : p.links)
    out += " (" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
  out += "\nsurvivors";
  for (auto s : p.survivors)
    out += " " + std::to_string(s);
  return out + "\n";
}

std::vector<PregroupType> types_of(const std::vector<std::string>& words, const Lexicon& lex) {
  std::vector<PregroupType> ts;
  for (const auto& w : words) {
    auto it = lex.entries.find(w);
    if (it == lex.entries.end())
      fail("unknown word '" + w + "'");
    ts.push_back(it->second.type);
  }
  return ts;
}

int cmd_parse(const std::string& lexpath, const std::vector<std::string>& words,
              const std::string& goal, const CliConfig& cfg) {
  Lexicon lex = parse_lexicon(read_input(lexpath));
  auto ts = types_of(words, lex);
  auto proofs = reduce_all(ts, parse_type(goal), cfg.all_proofs ? 1000 : 1);
  if (proofs.empty()) {
    std::cerr << "no reduction to " << goal << "\n";
    return Failed;
  }
  std::string out;
  for (std::size_t k = 0; k < proofs.size(); ++k) {
    if (cfg.all_proofs)
      out += "# proof " + std::to_string(k + 1) + "\n";
    out += proof_text(proofs[k]);
  }
  write_output(cfg.output, out);
  return Ok;
}

int cmd_meaning(const std::string& lexpath, const std::vector<std::string>& words,
                const std::string& goal, const CliConfig& cfg) {
  Lexicon lex = parse_lexicon(read_input(lexpath));
  auto ms = meanings_all(words, parse_type(goal), lex, cfg.all_proofs ? 1000 : 1);
  if (ms.empty()) {
    std::cerr << "no reduction to " << goal << "\n";
    return Failed;
  }
  std::string out;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (cfg.all_proofs)
      out += "# proof " + std::to_string(k + 1) + "\n";
    out += emit_dotbracket(ms[k].structure);
    if (cfg.loop_report)
      print_report(ms[k].report);
  }
  write_output(cfg.output, out);
  return Ok;
}

int cmd_render(const std::string& path, const CliConfig& cfg) {
  std::string out;
  if (is_ddna_path(path)) {
    Diagram d = load_diagram(path);
    if (cfg.output_format == "svg")
      out = render_diagram_svg(d, cfg.style);
    else if (cfg.output_format == "ddna")
      out = emit_ddna(d);
    else
      fail("format '" + cfg.output_format + "' is not available for diagrams (use svg or ddna)");
  } else {
    SecondaryStructure s = load_structure(path);
    if (cfg.output_format == "svg")
      out = render_structure_svg(s, cfg.style);
    else if (cfg.output_format == "text")
      out = render_structure_text(s);
    else if (cfg.output_format == "dotbracket")
      out = emit_dotbracket(s);
    else
      fail("format '" + cfg.output_format + "' is not available for structures");
  }
  write_output(cfg.output, out);
  return Ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"dnacat: DNA words, diagrams and secondary structures as a pivotal category"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string word, path_a, path_b, iface, lexicon, goal = "s";
  std::size_t source_len = 0;
  std::vector<std::string> sentence;

  auto theta_opt = [&](CLI::App* sub) {
    sub->add_option("--theta", cfg.theta, "minimum hairpin loop (default 0, env DNACAT_THETA)");
  };
  auto out_opt = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
  };

  auto* revcomp = app.add_subcommand("revcomp", "reverse complement of a word");
  revcomp->add_option("word", word)->required();

  auto* validate_cmd = app.add_subcommand("validate", "check a .ddna diagram or dot-bracket file");
  validate_cmd->add_option("path", path_a)->required();
  theta_opt(validate_cmd);

  auto* compose_cmd = app.add_subcommand("compose", "compose two .ddna diagrams (f then g)");
  compose_cmd->add_option("f", path_a)->required();
  compose_cmd->add_option("g", path_b)->required();
  compose_cmd->add_flag("--loop-report", cfg.loop_report, "print the loop report to stderr");
  out_opt(compose_cmd);

  auto* zip_cmd = app.add_subcommand("zip", "compose two straightened structures by zip-and-transfer");
  zip_cmd->add_option("fhat", path_a)->required();
  zip_cmd->add_option("ghat", path_b)->required();
  zip_cmd->add_option("--interface", iface, "the shared word y")->required();
  zip_cmd->add_flag("--loop-report", cfg.loop_report, "print the loop report to stderr");
  out_opt(zip_cmd);

  auto* bend_cmd = app.add_subcommand("bend", "straighten a .ddna diagram into dot-bracket");
  bend_cmd->add_option("path", path_a)->required();
  out_opt(bend_cmd);

  auto* unbend_cmd = app.add_subcommand("unbend", "read a dot-bracket structure as a diagram");
  unbend_cmd->add_option("path", path_a)->required();
  unbend_cmd->add_option("--source-len", source_len, "length of the x^v prefix")->required();
  out_opt(unbend_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every secondary structure on a word");
  enumerate_cmd->add_option("word", word)->required();
  theta_opt(enumerate_cmd);
  out_opt(enumerate_cmd);

  auto* count_cmd = app.add_subcommand("count", "count secondary structures on a word");
  count_cmd->add_option("word", word)->required();
  theta_opt(count_cmd);

  auto* fold_cmd = app.add_subcommand("fold", "maximum-bond structures on a word");
  fold_cmd->add_option("word", word)->required();
  theta_opt(fold_cmd);
  out_opt(fold_cmd);

  auto* parse_cmd = app.add_subcommand("parse", "pregroup reduction of a sentence");
  auto* meaning_cmd = app.add_subcommand("meaning", "secondary-structure meaning of a sentence");
  for (auto* sub : {parse_cmd, meaning_cmd}) {
    sub->add_option("--lexicon", lexicon, "lexicon JSON file")->required();
    sub->add_option("--goal", goal, "goal type (default s)");
    sub->add_flag("--all-proofs", cfg.all_proofs, "report every reduction, not just the canonical one");
    sub->add_option("words", sentence)->required();
    out_opt(sub);
  }
  meaning_cmd->add_flag("--loop-report", cfg.loop_report, "print the loop report to stderr");

  auto* render_cmd = app.add_subcommand("render", "draw a .ddna diagram or dot-bracket structure");
  render_cmd->add_option("path", path_a)->required();
  render_cmd->add_option("--format", cfg.output_format, "svg, text, dotbracket or ddna")
      ->check(CLI::IsMember({"svg", "text", "dotbracket", "ddna"}));
  render_cmd->add_option("--at-color", cfg.style.at_color, "colour of A-T pairs");
  render_cmd->add_option("--cg-color", cfg.style.cg_color, "colour of C-G pairs");
  render_cmd->add_option("--spacing", cfg.style.spacing, "distance between bases");
  render_cmd->add_option("--increment", cfg.style.arc_increment, "arc height per nesting level");
  render_cmd->add_flag("--arrows", cfg.style.show_direction_arrows, "draw wire direction arrows");
  out_opt(render_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; usage errors count as bad input
    return app.exit(e) == 0 ? Ok : BadInput;
  }

  try {
    const FoldConfig fold{cfg.theta};
    if (revcomp->parsed()) {
      std::cout << reverse_complement(Word::parse(word)).str() << "\n";
      return Ok;
    }
    if (validate_cmd->parsed())
      return cmd_validate(path_a, cfg);
    if (compose_cmd->parsed())
      return cmd_compose(path_a, path_b, cfg);
    if (zip_cmd->parsed())
      return cmd_zip(path_a, path_b, iface, cfg);
    if (bend_cmd->parsed()) {
      write_output(cfg.output, emit_dotbracket(bend(load_diagram(path_a))));
      return Ok;
    }
    if (unbend_cmd->parsed()) {
      write_output(cfg.output, emit_ddna(unbend(load_structure(path_a), source_len)));
      return Ok;
    }
    if (enumerate_cmd->parsed()) {
      Word w = Word::parse(word);
      std::string out = w.str() + "\n";
      auto e = enumerate(w, fold);
      for (const auto& s : e)
        out += bracket_line(s) + "\n";
      write_output(cfg.output, out);
      return Ok;
    }
    if (count_cmd->parsed()) {
      std::cout << count(Word::parse(word), fold) << "\n";
      return Ok;
    }
    if (fold_cmd->parsed()) {
      Word w = Word::parse(word);
      auto r = max_bond(w, fold);
      std::string out = "# max_bonds " + std::to_string(r.max_bonds) + "\n" + w.str() + "\n";
      for (const auto& s : r.witnesses)
        out += bracket_line(s) + "\n";
      write_output(cfg.output, out);
      return Ok;
    }
    if (parse_cmd->parsed())
      return cmd_parse(lexicon, sentence, goal, cfg);
    if (meaning_cmd->parsed())
      return cmd_meaning(lexicon, sentence, goal, cfg);
    if (render_cmd->parsed())
      return cmd_render(path_a, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  }
  return BadInput;
}
