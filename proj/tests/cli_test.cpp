#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run shell(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// stdout captured, stderr discarded
Run run(const std::string& args) { return shell(std::string(DNACAT_CLI) + " " + args + " 2>/dev/null"); }

// stderr captured, stdout discarded
Run run_err(const std::string& args) {
  return shell(std::string(DNACAT_CLI) + " " + args + " 2>&1 1>/dev/null");
}

std::string fx(const std::string& name) { return std::string(DNACAT_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

TEST(Cli, Revcomp) {
  auto r = run("revcomp ACG");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "CGT\n");
  EXPECT_EQ(run("revcomp ACGN").code, 2);
}

TEST(Cli, Validate) {
  EXPECT_EQ(run("validate " + fx("compose_f.ddna")).out, "ok\n");
  auto bad = run("validate " + fx("crossing.ddna"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("arc-crossing"), std::string::npos);
  EXPECT_EQ(run("validate --theta 3 " + fx("hairpin.dbn")).code, 0);
  EXPECT_EQ(run("validate --theta 4 " + fx("hairpin.dbn")).code, 1);
  EXPECT_EQ(run("validate " + fx("missing.ddna")).code, 2);
}

TEST(Cli, Compose) {
  auto r = run("compose " + fx("compose_f.ddna") + " " + fx("compose_g.ddna"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(fx("compose_gf.ddna")));
  EXPECT_EQ(run("compose " + fx("tmsd_f.ddna") + " " + fx("tmsd_g.ddna")).out, slurp(fx("tmsd_gf.ddna")));
  EXPECT_EQ(run("compose " + fx("compose_f.ddna") + " " + fx("tmsd_g.ddna")).code, 2);
  auto rep = run_err("compose --loop-report " + fx("compose_f.ddna") + " " + fx("compose_g.ddna"));
  EXPECT_NE(rep.out.find("closed_loops 1"), std::string::npos);
  EXPECT_NE(rep.out.find("dangled_endpoints 1"), std::string::npos);
}

TEST(Cli, BendAndUnbend) {
  EXPECT_EQ(run("bend " + fx("bend_f.ddna")).out, slurp(fx("bend_f.dbn")));
  EXPECT_EQ(run("unbend --source-len 5 " + fx("bend_f.dbn")).out, slurp(fx("bend_f.ddna")));
}

TEST(Cli, Zip) {
  EXPECT_EQ(run("zip --interface CGAAGG " + fx("zip_fhat.dbn") + " " + fx("zip_ghat.dbn")).out,
            slurp(fx("zip_result.dbn")));
  EXPECT_EQ(run("zip --interface GAATCTCTC " + fx("tmsd_fhat.dbn") + " " + fx("tmsd_ghat.dbn")).out,
            slurp(fx("tmsd_result.dbn")));
  auto rep = run_err("zip --loop-report --interface GAATCTCTC " + fx("tmsd_fhat.dbn") + " " +
                     fx("tmsd_ghat.dbn"));
  EXPECT_NE(rep.out.find("interface_bonds_formed 9"), std::string::npos);
}

TEST(Cli, Structures) {
  EXPECT_EQ(run("enumerate AT").out, "AT\n..\n()\n");
  EXPECT_EQ(run("enumerate --theta 1 AT").out, "AT\n..\n");
  auto listed = run("enumerate ACGTACGT").out;
  EXPECT_EQ(run("count ACGTACGT").out,
            std::to_string(std::count(listed.begin(), listed.end(), '\n') - 1) + "\n");
  auto f = run("fold --theta 3 ACGTAGGGTACGT");
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out.rfind("# max_bonds 5\nACGTAGGGTACGT\n", 0), 0u);
  EXPECT_NE(f.out.find("(((((...)))))\n"), std::string::npos);
}

TEST(Cli, Grammar) {
  const std::string lex = "--lexicon " + fx("cats_lexicon.json");
  EXPECT_EQ(run("parse " + lex + " Cats chase mice").out, "links (1,2) (4,5)\nsurvivors 3\n");
  EXPECT_EQ(run("meaning " + lex + " Cats chase mice").out, "GCTAGCATCGAT\n..()(...)...\n");
  EXPECT_EQ(run("meaning " + lex + " Cats Cats").code, 1);
  EXPECT_EQ(run("meaning " + lex + " Cats barks").code, 2);
}

TEST(Cli, Render) {
  auto svg = run("render " + fx("hairpin.dbn"));
  EXPECT_EQ(svg.code, 0);
  EXPECT_EQ(svg.out.rfind("<?xml", 0), 0u);
  EXPECT_EQ(svg.out, run("render " + fx("hairpin.dbn")).out);
  EXPECT_EQ(run("render --format text " + fx("hairpin.dbn")).out.substr(0, 28),
            "ACGTAGGGTACGT\n(((((...)))))\n");
  EXPECT_EQ(run("render --format ddna " + fx("rectangle_f.ddna")).out, slurp(fx("rectangle_f.ddna")));
  EXPECT_EQ(run("render --format text " + fx("rectangle_f.ddna")).code, 2);
  EXPECT_EQ(run("render --format bogus " + fx("hairpin.dbn")).code, 2);
}
