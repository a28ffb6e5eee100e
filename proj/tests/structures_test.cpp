#include <gtest/gtest.h>

#include <cstdint>
#include <limits>

#include "test_util.hpp"

using namespace dnacat;
using dnacat::testutil::Rng;

namespace {

std::set<PairList> arc_sets(const std::vector<SecondaryStructure>& v) {
  std::set<PairList> out;
  for (const auto& s : v) out.insert(s.arcs);
  return out;
}

} // namespace

TEST(Membership, Examples) {
  auto hp = parse_dotbracket("ACGTAGGGTACGT", "(((((...)))))");
  EXPECT_TRUE(is_member(hp, {3}));
  EXPECT_FALSE(is_member(hp, {4}));
  EXPECT_TRUE(is_member(parse_dotbracket("AT", "()"), {0}));
  EXPECT_FALSE(is_member(parse_dotbracket("AT", "()"), {1}));
  EXPECT_FALSE(is_member(SecondaryStructure{Word::parse("AATT"), {{1, 3}, {2, 4}}}));
}

TEST(Enumerate, SmallWords) {
  auto e = enumerate_all(Word::parse("AT"));
  ASSERT_EQ(e.size(), 2u);
  EXPECT_TRUE(e[0].arcs.empty());
  EXPECT_EQ(e[1].arcs, (PairList{{1, 2}}));
  EXPECT_EQ(enumerate_all(Word{}).size(), 1u);
  EXPECT_EQ(enumerate_all(Word::parse("AT"), {1}).size(), 1u);
  EXPECT_EQ(enumerate_all(Word::parse("AAAA")).size(), 1u);
}

TEST(Enumerate, LexicographicAndLazy) {
  Word w = Word::parse("ACGTACGT");
  auto all = enumerate_all(w);
  for (std::size_t k = 1; k < all.size(); ++k)
    EXPECT_LT(all[k - 1].arcs, all[k].arcs);
  auto e = enumerate(w);
  auto first = e.next();
  ASSERT_TRUE(first);
  EXPECT_TRUE(first->arcs.empty());
  auto second = e.next();
  ASSERT_TRUE(second);
  EXPECT_EQ(second->arcs, all[1].arcs);
}

TEST(Enumerate, MatchesBruteForce) {
  Rng rng(30);
  for (int k = 0; k < 150; ++k) {
    Word w = testutil::random_word(rng, 10);
    for (std::size_t theta : {0u, 1u, 3u}) {
      auto all = enumerate_all(w, {theta});
      auto oracle = testutil::brute_force_structures(w, theta);
      EXPECT_EQ(arc_sets(all), oracle) << w.str() << " theta " << theta;
      EXPECT_EQ(all.size(), oracle.size());
      for (const auto& s : all) EXPECT_TRUE(is_member(s, {theta}));
    }
  }
}

TEST(Count, MatchesEnumeration) {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    Word w = testutil::random_word(rng, 12);
    for (std::size_t theta : {0u, 3u})
      EXPECT_EQ(count(w, {theta}), BigCount(enumerate_all(w, {theta}).size())) << w.str();
  }
}

TEST(Count, MonotoneInThetaAndDualInvariant) {
  Rng rng(32);
  for (int k = 0; k < 100; ++k) {
    Word w = testutil::random_word(rng, 20);
    for (std::size_t theta = 0; theta < 5; ++theta)
      EXPECT_GE(count(w, {theta}), count(w, {theta + 1}));
    EXPECT_EQ(count(w), count(reverse_complement(w)));
  }
}

TEST(Count, LongWordsExceedMachineIntegers) {
  std::string s;
  for (int k = 0; k < 60; ++k) s += "AT";
  BigCount c = count(Word::parse(s));
  EXPECT_GT(c, BigCount(std::numeric_limits<std::uint64_t>::max()));
}

TEST(MaxBond, Hairpin) {
  Word w = Word::parse("ACGTAGGGTACGT");
  auto r = max_bond(w, {3});
  EXPECT_EQ(r.max_bonds, 5u);
  auto hp = parse_dotbracket("ACGTAGGGTACGT", "(((((...)))))");
  bool found = false;
  for (const auto& s : r.witnesses) {
    EXPECT_EQ(s.arcs.size(), 5u);
    found |= s == hp;
  }
  EXPECT_TRUE(found);
}

TEST(MaxBond, AgreesWithEnumeration) {
  Rng rng(33);
  for (int k = 0; k < 100; ++k) {
    Word w = testutil::random_word(rng, 10);
    for (std::size_t theta : {0u, 3u}) {
      auto all = enumerate_all(w, {theta});
      std::size_t best = 0;
      for (const auto& s : all) best = std::max(best, s.arcs.size());
      std::vector<SecondaryStructure> expected;
      for (const auto& s : all)
        if (s.arcs.size() == best) expected.push_back(s);
      auto r = max_bond(w, {theta});
      EXPECT_EQ(r.max_bonds, best);
      EXPECT_EQ(r.witnesses, expected) << w.str();
    }
  }
}

TEST(MaxBond, EmptyWord) {
  auto r = max_bond(Word{});
  EXPECT_EQ(r.max_bonds, 0u);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_TRUE(r.witnesses[0].arcs.empty());
}
