#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "filtlex/errors.h"
#include "filtlex/filters.h"
#include "filtlex/scoring.h"
#include "oracles.h"

using namespace filtlex;

namespace {

SentencePair pair_of(PairId id, const std::vector<std::string>& src, const std::vector<std::string>& tgt) {
  return {id, make_sentence(src), make_sentence(tgt)};
}

}  // namespace

TEST(G2, ExactValues) {
  EXPECT_EQ(g2({5, 5, 5, 5}), 0.0);
  EXPECT_NEAR(g2({10, 0, 0, 10}), 40.0 * std::log(2.0), 1e-12);
  EXPECT_NEAR(g2({1, 0, 0, 1}), 4.0 * std::log(2.0), 1e-12);
  EXPECT_EQ(g2({3, 0, 7, 0}), 0.0);
  EXPECT_EQ(g2({0, 0, 0, 9}), 0.0);
  EXPECT_THROW(g2({0, 0, 0, 0}), ContractError);
}

TEST(G2, MatchesDirectFormula) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> cell(0, 1000);
  for (int i = 0; i < 2000; ++i) {
    const ContingencyTable t{cell(rng), cell(rng), cell(rng), cell(rng)};
    if (t.total() == 0) continue;
    const double want = oracle::direct_g2(t.a, t.b, t.c, t.d);
    const double got = g2(t);
    EXPECT_GE(got, 0.0);
    EXPECT_NEAR(got, want, 1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST(G2, SymmetricUnderRowColumnSwap) {
  EXPECT_EQ(g2({3, 1, 1, 5}), g2({1, 3, 5, 1}));
  EXPECT_EQ(g2({3, 1, 2, 5}), g2({3, 2, 1, 5}));
}

TEST(Counting, SaturatedPair) {
  const Bitext corpus({pair_of(0, {"S"}, {"T"}), pair_of(1, {"S"}, {"T"})});
  Candidates all;
  for (const auto& p : corpus.pairs()) {
    const auto c = generate_candidates(p);
    all.insert(all.end(), c.begin(), c.end());
  }
  const auto tables = count_cooccurrences(all, corpus);
  EXPECT_EQ(tables.at({"S", "T"}), (ContingencyTable{2, 0, 0, 0}));
}

TEST(Counting, FilteredPairDoesNotCount) {
  const Bitext corpus({pair_of(0, {"S", "x"}, {"T"}), pair_of(1, {"S"}, {"T", "y"}), pair_of(2, {"S"}, {"T"})});
  Candidates kept;
  for (const auto& p : corpus.pairs()) {
    for (const auto& c : generate_candidates(p)) {
      if (p.id == 1 && c.source_word == "S" && c.target_word == "T") continue;
      kept.push_back(c);
    }
  }
  const auto tables = count_cooccurrences(kept, corpus);
  // manual count: S,T survive in pairs 0 and 2; S and T each occur in 3 pairs
  const auto& t = tables.at({"S", "T"});
  EXPECT_EQ(t.a, 2u);
  EXPECT_EQ(t.b, 1u);
  EXPECT_EQ(t.c, 1u);
  // 3 - 2 - 1 - 1 would be negative
  EXPECT_EQ(t.d, 0u);
}

TEST(Counting, FilteredPairInLargerCorpus) {
  std::vector<SentencePair> pairs = {pair_of(0, {"S"}, {"T"}), pair_of(1, {"S"}, {"T"})};
  for (PairId i = 2; i < 8; ++i) pairs.push_back(pair_of(i, {"o"}, {"p"}));
  const Bitext corpus(std::move(pairs));
  Candidates kept = generate_candidates(corpus.pairs()[0]);
  const auto tables = count_cooccurrences(kept, corpus);
  EXPECT_EQ(tables.at({"S", "T"}), (ContingencyTable{1, 1, 1, 5}));
}

TEST(Counting, MarginsFromCorpus) {
  std::vector<SentencePair> pairs;
  // S in pairs 0-3, T in pairs 0,1,4; S and T together in 0,1
  for (PairId i = 0; i < 10; ++i) {
    std::vector<std::string> src = {"w" + std::to_string(i)}, tgt = {"v" + std::to_string(i)};
    if (i < 4) src.push_back("S");
    if (i < 2 || i == 4) tgt.push_back("T");
    pairs.push_back(pair_of(i, src, tgt));
  }
  const Bitext corpus(std::move(pairs));
  Candidates all;
  for (const auto& p : corpus.pairs()) {
    const auto c = generate_candidates(p);
    all.insert(all.end(), c.begin(), c.end());
  }
  const auto tables = count_cooccurrences(all, corpus);
  EXPECT_EQ(tables.at({"S", "T"}), (ContingencyTable{2, 2, 1, 5}));
  for (const auto& [key, t] : tables) {
    EXPECT_EQ(t.total(), 10u) << key.first << ' ' << key.second;
  }
}

TEST(Counting, DuplicatesWithinAPairCountOnce) {
  const Bitext corpus({pair_of(0, {"le", "le"}, {"the", "the"})});
  const auto tables = count_cooccurrences(generate_candidates(corpus.pairs()[0]), corpus);
  EXPECT_EQ(tables.at({"le", "the"}).a, 1u);
}

TEST(Counting, UnknownPairIsContractError) {
  const Bitext corpus({pair_of(0, {"a"}, {"b"})});
  Candidates c = {{"a", "b", 0, 0, 7}};
  EXPECT_THROW(count_cooccurrences(c, corpus), ContractError);
}

TEST(Counting, MergeEqualsSingleCounter) {
  const Bitext corpus({pair_of(0, {"a", "b"}, {"x"}), pair_of(1, {"a"}, {"x", "y"}), pair_of(2, {"b"}, {"y"})});
  CooccurrenceCounter whole, left, right;
  for (const auto& p : corpus.pairs()) {
    whole.add(generate_candidates(p));
    (p.id < 2 ? left : right).add(generate_candidates(p));
  }
  left.merge(right);
  EXPECT_EQ(left.tables(corpus), whole.tables(corpus));
  EXPECT_EQ(whole.joint("a", "x"), 2u);
}

TEST(BuildLexicon, RanksByScoreThenCountThenTarget) {
  std::map<WordPair, ContingencyTable> counts;
  // equal G^2 under a row-and-column swap, different joint counts
  counts[{"S", "best"}] = {10, 0, 0, 10};
  counts[{"S", "rare"}] = {2, 1, 1, 6};
  counts[{"S", "common"}] = {6, 1, 1, 2};
  const auto lex = build_lexicon(counts, 2);
  const auto* list = lex.find("S");
  ASSERT_NE(list, nullptr);
  ASSERT_EQ(list->size(), 2u);
  EXPECT_EQ((*list)[0].target, "best");
  EXPECT_EQ((*list)[1].target, "common");
  EXPECT_EQ((*list)[1].cooccurrence, 6u);
  EXPECT_EQ(g2({2, 1, 1, 6}), g2({6, 1, 1, 2}));

  std::map<WordPair, ContingencyTable> twins;
  twins[{"S", "zz"}] = {2, 1, 1, 6};
  twins[{"S", "aa"}] = {2, 1, 1, 6};
  EXPECT_EQ(build_lexicon(twins, 1).best("S"), "aa");
}

TEST(BuildLexicon, NegativeAssociationRanksLast) {
  std::map<WordPair, ContingencyTable> counts;
  // strongly avoiding pair with a large unsigned G^2
  counts[{"S", "frequent"}] = {12, 140, 150, 0};
  counts[{"S", "partner"}] = {140, 12, 3, 145};
  counts[{"S", "weak"}] = {1, 151, 0, 148};
  const auto lex = build_lexicon(counts, 3);
  const auto* list = lex.find("S");
  ASSERT_NE(list, nullptr);
  EXPECT_GT(g2(counts[{"S", "frequent"}]), g2(counts[{"S", "weak"}]));
  EXPECT_EQ((*list)[0].target, "partner");
  EXPECT_EQ((*list)[1].target, "weak");
  EXPECT_EQ((*list)[2].target, "frequent");
  EXPECT_LT((*list)[2].score, 0.0);
}

TEST(G2, SignFollowsAssociation) {
  EXPECT_GT(signed_g2({8, 2, 2, 8}), 0.0);
  EXPECT_LT(signed_g2({2, 8, 8, 2}), 0.0);
  EXPECT_EQ(signed_g2({2, 8, 8, 2}), -g2({2, 8, 8, 2}));
  EXPECT_EQ(signed_g2({5, 5, 5, 5}), 0.0);
}

TEST(BuildLexicon, SevenBestIsOrdered) {
  std::map<WordPair, ContingencyTable> counts;
  for (int i = 0; i < 12; ++i) counts[{"premier", "t" + std::to_string(i)}] = {std::uint64_t(i + 1), 3, 2, 40};
  const auto lex = build_lexicon(counts, 7);
  const auto* list = lex.find("premier");
  ASSERT_NE(list, nullptr);
  ASSERT_EQ(list->size(), 7u);
  for (std::size_t k = 1; k < list->size(); ++k) EXPECT_GE((*list)[k - 1].score, (*list)[k].score);
  EXPECT_EQ(list->front().target, "t11");
}

TEST(BuildLexicon, MinCooccurrence) {
  std::map<WordPair, ContingencyTable> counts;
  counts[{"a", "x"}] = {1, 0, 0, 5};
  counts[{"a", "y"}] = {2, 0, 1, 3};
  counts[{"b", "x"}] = {1, 1, 0, 4};
  const auto lex = build_lexicon(counts, 3, 2);
  EXPECT_FALSE(lex.contains("b"));
  ASSERT_TRUE(lex.contains("a"));
  EXPECT_EQ(lex.find("a")->size(), 1u);
  EXPECT_EQ(lex.best("a"), "y");
}

TEST(NBest, Invariants) {
  EXPECT_THROW(NBestLexicon(0), ConfigError);
  NBestLexicon lex(2);
  EXPECT_THROW(lex.set_entries("s", {{"a", 3, 1}, {"b", 2, 1}, {"c", 1, 1}}), ContractError);
  EXPECT_THROW(lex.set_entries("s", {{"a", 3, 1}, {"a", 2, 1}}), ContractError);
  EXPECT_THROW(lex.set_entries("s", {{"a", 1, 1}, {"b", 2, 1}}), ContractError);
  lex.set_entries("s", {{"a", 2, 1}, {"b", 2, 1}});
  EXPECT_EQ(lex.best("s"), "a");
  EXPECT_FALSE(lex.best("t"));
}

TEST(LexiconFile, RoundTrip) {
  NBestLexicon lex(3);
  lex.set_entries("chat", {{"cat", 12.5, 4}, {"the", 1.25, 2}});
  lex.set_entries("été", {{"summer", 3.0, 1}});
  std::ostringstream out;
  write_lexicon(out, lex, {{"filters", "cognate,align"}});
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, 6), "# n=3\n");
  EXPECT_NE(text.find("chat\t1\tcat\t12.500000\t4\n"), std::string::npos);
  std::istringstream in(text);
  const auto back = read_lexicon(in);
  EXPECT_EQ(back, lex);
  std::ostringstream again;
  write_lexicon(again, back, {{"filters", "cognate,align"}});
  EXPECT_EQ(again.str(), text);
}

TEST(LexiconFile, FormatErrors) {
  std::istringstream short_row("a\t1\tb\t2.0\n");
  EXPECT_THROW(read_lexicon(short_row), FormatError);
  std::istringstream skipped_rank("a\t1\tb\t2.0\t1\na\t3\tc\t1.0\t1\n");
  EXPECT_THROW(read_lexicon(skipped_rank), FormatError);
  std::istringstream split_source("a\t1\tb\t2.0\t1\nc\t1\td\t1.0\t1\na\t2\te\t1.0\t1\n");
  EXPECT_THROW(read_lexicon(split_source), FormatError);
  std::istringstream unsorted("a\t1\tb\t1.0\t1\na\t2\tc\t2.0\t1\n");
  EXPECT_THROW(read_lexicon(unsorted), FormatError);
  std::istringstream no_header("a\t1\tb\t2.0\t1\na\t2\tc\t1.0\t1\n");
  EXPECT_EQ(read_lexicon(no_header).n_max(), 2u);
}

TEST(FormatFixed, NoNegativeZero) {
  EXPECT_EQ(format_fixed(-0.0), "0.000000");
  EXPECT_EQ(format_fixed(-1e-9), "0.000000");
  EXPECT_EQ(format_fixed(0.83333333, 4), "0.8333");
}
