#include <gtest/gtest.h>

#include <fstream>
#include <iterator>

#include "test_util.hpp"

using namespace dnacat;

namespace {

Lexicon cats() {
  std::ifstream in(DNACAT_FIXTURES "/cats_lexicon.json");
  return parse_lexicon(std::string(std::istreambuf_iterator<char>(in), {}));
}

std::vector<PregroupType> types(std::initializer_list<const char*> ts) {
  std::vector<PregroupType> out;
  for (auto t : ts) out.push_back(parse_type(t));
  return out;
}

} // namespace

TEST(Types, Parse) {
  auto t = parse_type("n^r s n^l");
  ASSERT_EQ(t.terms.size(), 3u);
  EXPECT_EQ(t.terms[0], (SimpleTerm{"n", 1}));
  EXPECT_EQ(t.terms[1], (SimpleTerm{"s", 0}));
  EXPECT_EQ(t.terms[2], (SimpleTerm{"n", -1}));
  EXPECT_EQ(parse_type("n^ll").terms[0].adjoint, -2);
  EXPECT_EQ(parse_type("n^rr").terms[0].adjoint, 2);
  EXPECT_TRUE(parse_type("1").terms.empty());
  EXPECT_TRUE(parse_type("").terms.empty());
  EXPECT_EQ(to_string(t), "n^r s n^l");
  EXPECT_EQ(to_string(PregroupType{}), "1");
  EXPECT_THROW(parse_type("n^x"), Error);
  EXPECT_THROW(parse_type("n^lr"), Error);
  EXPECT_THROW(parse_type("^l"), Error);
}

TEST(Types, Contraction) {
  EXPECT_TRUE(contracts({"n", 0}, {"n", 1}));
  EXPECT_TRUE(contracts({"n", -1}, {"n", 0}));
  EXPECT_FALSE(contracts({"n", 1}, {"n", 0}));
  EXPECT_FALSE(contracts({"n", 0}, {"s", 1}));
}

TEST(Reduce, TransitiveSentence) {
  auto ts = types({"n", "n^r s n^l", "n"});
  auto p = reduce(ts, parse_type("s"));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->links, (PairList{{1, 2}, {4, 5}}));
  EXPECT_EQ(p->survivors, (std::vector<std::size_t>{3}));
  EXPECT_FALSE(proof_problem(*p, flatten(ts), parse_type("s")));
  EXPECT_EQ(reduce_all(ts, parse_type("s")).size(), 1u);
}

TEST(Reduce, Failures) {
  EXPECT_FALSE(reduce(types({"n", "n"}), parse_type("s")));
  EXPECT_FALSE(reduce(types({"n^r", "n"}), parse_type("1")));
  EXPECT_TRUE(reduce(types({"n", "n^r"}), parse_type("1")));
  EXPECT_TRUE(reduce(types({"n^l", "n"}), parse_type("1")));
  EXPECT_TRUE(reduce(types({"n^ll", "n^l"}), parse_type("1")));
  EXPECT_TRUE(reduce({}, parse_type("1")));
}

TEST(Reduce, AmbiguityInCanonicalOrder) {
  auto ts = types({"n n^r", "n n^r"});
  auto goal = parse_type("n n^r");
  auto all = reduce_all(ts, goal);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].links, (PairList{{1, 2}}));
  EXPECT_EQ(all[0].survivors, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(all[1].links, (PairList{{3, 4}}));
  EXPECT_EQ(all[1].survivors, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(*reduce(ts, goal), all[0]);
  EXPECT_EQ(reduce_all(ts, goal, 1).size(), 1u);
  EXPECT_TRUE(reduce_all(types({"n^l", "n", "n^r"}), parse_type("n")).empty());
}

TEST(Reduce, EveryProofIsSound) {
  testutil::Rng rng(40);
  const char* pool[] = {"n", "n^l", "n^r", "s", "s^l", "s^r", "n^ll", "n^rr"};
  std::uniform_int_distribution<int> pick(0, 7);
  for (int k = 0; k < 300; ++k) {
    std::vector<PregroupType> ts;
    const std::size_t len = testutil::small(rng, 7);
    for (std::size_t t = 0; t < len; ++t) ts.push_back(parse_type(pool[pick(rng)]));
    const PregroupType flat = flatten(ts);
    for (const char* g : {"1", "s", "n"}) {
      auto goal = parse_type(g);
      auto all = reduce_all(ts, goal);
      for (const auto& p : all) EXPECT_FALSE(proof_problem(p, flat, goal));
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) EXPECT_FALSE(all[a] == all[b]);
      EXPECT_EQ(reduce(ts, goal).has_value(), !all.empty());
    }
  }
}

TEST(Reduce, ProofProblems) {
  auto flat = parse_type("n n^r s n^l n");
  auto s = parse_type("s");
  EXPECT_TRUE(proof_problem({{{1, 3}, {4, 5}}, {2}}, flat, s));   // n, s do not contract
  EXPECT_TRUE(proof_problem({{{1, 2}}, {3}}, flat, s));           // terms left over
  EXPECT_TRUE(proof_problem({{{1, 2}, {4, 5}}, {}}, flat, s));    // goal not spelled
  EXPECT_TRUE(proof_problem({{{1, 3}, {2, 4}}, {}}, parse_type("n s n^r s^r"), PregroupType{}));  // crossing
}

TEST(Functor, Objects) {
  Lexicon lex = cats();
  EXPECT_EQ(functor_object(parse_type("n"), lex).str(), "AGGAACTGGAAG");
  EXPECT_EQ(functor_object(parse_type("n^r"), lex).str(), "CTTCCAGTTCCT");
  EXPECT_EQ(functor_object(parse_type("n^l"), lex), functor_object(parse_type("n^r"), lex));
  EXPECT_EQ(functor_object(parse_type("n^ll"), lex), functor_object(parse_type("n"), lex));
  Word chase = functor_object(parse_type("n^r s n^l"), lex);
  EXPECT_EQ(chase.str(), "CTTCCAGTTCCTGCTAGCATCGATCTTCCAGTTCCT");
  EXPECT_TRUE(functor_object(PregroupType{}, lex).empty());
  EXPECT_THROW(functor_object(parse_type("q"), lex), Error);
}

TEST(Functor, ReductionDiagram) {
  Lexicon lex = cats();
  auto ts = types({"n", "n^r s n^l", "n"});
  auto p = reduce(ts, parse_type("s"));
  ASSERT_TRUE(p);
  Diagram d = functor_reduction(*p, ts, lex);
  EXPECT_EQ(d.source.size(), 60u);
  EXPECT_EQ(d.target.str(), "GCTAGCATCGAT");
  EXPECT_EQ(d.source_arcs.size(), 24u);
  EXPECT_EQ(d.through.size(), 12u);
  EXPECT_TRUE(d.target_arcs.empty());
  EXPECT_TRUE(is_valid(d));
  EXPECT_EQ(d.through.front(), (Pair{25, 1}));
  // the first link is ev on F(n)
  EXPECT_EQ(d.source_arcs.front(), (Pair{1, 24}));
}

TEST(Meaning, CatsChaseMice) {
  Lexicon lex = cats();
  auto m = meaning({"Cats", "chase", "mice"}, parse_type("s"), lex);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->structure.word.str(), "GCTAGCATCGAT");
  EXPECT_EQ(m->structure.arcs, (PairList{{3, 4}, {5, 9}}));
  EXPECT_EQ(m->proof.links, (PairList{{1, 2}, {4, 5}}));
  EXPECT_EQ(meanings_all({"Cats", "chase", "mice"}, parse_type("s"), lex).size(), 1u);
}

TEST(Meaning, Ungrammatical) {
  Lexicon lex = cats();
  EXPECT_FALSE(meaning({"Cats", "Cats"}, parse_type("s"), lex));
  EXPECT_FALSE(meaning({"chase"}, parse_type("s"), lex));
  EXPECT_THROW(meaning({"dogs"}, parse_type("s"), lex), Error);
}

TEST(Lexicon, Validation) {
  Lexicon lex = cats();
  EXPECT_EQ(lex.fold.min_loop, 3u);
  EXPECT_EQ(lex.entries.size(), 3u);
  EXPECT_THROW(add_entry(lex, "x", parse_type("n"), "()"), Error);             // length
  EXPECT_THROW(add_entry(lex, "x", parse_type("n"), "((.))......."), Error);  // min loop
  EXPECT_THROW(add_entry(lex, "x", parse_type("n"), "(..........)"), Error);  // A-G
  EXPECT_THROW(parse_lexicon("{"), Error);
  EXPECT_THROW(parse_lexicon(R"({"types": {"n": "ACGT"}})"), Error);
  EXPECT_THROW(parse_lexicon(R"({"types": {"n": "ACGT"}, "theta": -1, "entries": {}})"), Error);
}
