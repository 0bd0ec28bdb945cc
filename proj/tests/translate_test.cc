#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "filtlex/errors.h"
#include "filtlex/translate.h"

using namespace filtlex;

namespace {

NBestLexicon one_best(const std::map<std::string, std::string>& map) {
  NBestLexicon lex(1);
  for (const auto& [s, t] : map) lex.set_entries(s, {{t, 1.0, 1}});
  return lex;
}

// 100 one-word pairs s_i / t_i; the lexicon is right on the first `correct` words
NBestLexicon scored_lexicon(int correct) {
  std::map<std::string, std::string> map;
  for (int i = 0; i < 100; ++i) map["s" + std::to_string(i)] = i < correct ? "t" + std::to_string(i) : "wrong";
  return one_best(map);
}

Bitext dev_set() {
  std::vector<SentencePair> pairs;
  for (std::size_t i = 0; i < 100; ++i)
    pairs.push_back({i, make_sentence({"s" + std::to_string(i)}), make_sentence({"t" + std::to_string(i)})});
  return Bitext(std::move(pairs));
}

}  // namespace

TEST(OrderChain, SortsByDevPrecision) {
  const auto chain = order_chain({{"baseline", scored_lexicon(45)}, {"filtered", scored_lexicon(54)}}, dev_set());
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain.links()[0].label, "filtered");
  EXPECT_DOUBLE_EQ(chain.links()[0].measured_precision, 0.54);
  EXPECT_EQ(chain.links()[1].label, "baseline");
  EXPECT_DOUBLE_EQ(chain.links()[1].measured_precision, 0.45);
}

TEST(OrderChain, TiesAndBoundaries) {
  const auto tied = order_chain({{"zeta", scored_lexicon(10)}, {"alpha", scored_lexicon(10)}}, dev_set());
  EXPECT_EQ(tied.links()[0].label, "alpha");
  EXPECT_EQ(order_chain({{"only", scored_lexicon(3)}}, dev_set()).size(), 1u);
  EXPECT_THROW(order_chain({}, dev_set()), ConfigError);
  EXPECT_THROW(order_chain({{"x", scored_lexicon(1)}}, Bitext{}), ConfigError);
  EXPECT_THROW(BackoffChain({{"low", scored_lexicon(1), 0.1}, {"high", scored_lexicon(1), 0.9}}), ConfigError);
}

TEST(TranslateWord, FirstHitWins) {
  const BackoffChain chain({{"filtered", one_best({{"chat", "cat"}}), 0.6},
                            {"baseline", one_best({{"chat", "the"}, {"chien", "dog"}}), 0.4}});
  EXPECT_EQ(translate_word("chat", chain), "cat");
  EXPECT_EQ(translate_word("chien", chain), "dog");
  EXPECT_FALSE(translate_word("oiseau", chain));
}

TEST(ScoreTokens, Examples) {
  const BackoffChain chain({{"base", one_best({{"a", "x"}, {"b", "y"}, {"c", "nope"}}), 0.5}});
  const Bitext one({{0, make_sentence({"a", "b", "c", "d"}), make_sentence({"x", "y", "z"})}});
  const auto s = score_tokens(chain, one);
  EXPECT_EQ(s.tokens, 4u);
  EXPECT_EQ(s.translated, 3u);
  EXPECT_EQ(s.correct, 2u);
  EXPECT_DOUBLE_EQ(s.percent_correct(), 0.5);

  const Bitext unknown({{0, make_sentence({"q", "r"}), make_sentence({"x"})}});
  EXPECT_EQ(score_corpus(chain, unknown), 0.0);
  EXPECT_THROW(score_tokens(chain, Bitext{}), ConfigError);

  const BackoffChain identity({{"copy", one_best({{"a", "a"}, {"b", "b"}}), 1.0}});
  const Bitext copy({{0, make_sentence({"a", "b", "a"}), make_sentence({"a", "b", "a"})}});
  EXPECT_EQ(score_corpus(identity, copy), 1.0);
}

TEST(ScoreTokens, LeftmostConsumption) {
  const BackoffChain chain({{"base", one_best({{"a", "x"}}), 0.5}});
  const Bitext b({{0, make_sentence({"a", "a"}), make_sentence({"x"})}});
  EXPECT_EQ(score_tokens(chain, b).correct, 1u);
  EXPECT_EQ(score_tokens(chain, b, 4).correct, 1u);
}

TEST(ScoreTokens, AddingAFilteredLexiconKeepsRecall) {
  const auto baseline = one_best({{"a", "x"}, {"b", "y"}, {"c", "z"}});
  const Bitext test({{0, make_sentence({"a", "b", "c", "d"}), make_sentence({"x", "w"})}});
  const BackoffChain base({{"base", baseline, 0.3}});
  const BackoffChain both({{"filt", one_best({{"b", "w"}}), 0.8}, {"base", baseline, 0.3}});
  EXPECT_EQ(score_tokens(both, test).translated, score_tokens(base, test).translated);
  EXPECT_GE(score_tokens(both, test).correct, score_tokens(base, test).correct);
}

TEST(Translations, Format) {
  const BackoffChain chain({{"base", one_best({{"a", "x"}}), 0.5}});
  const Bitext b({{0, make_sentence({"a", "q"}), make_sentence({"x"})}, {1, make_sentence({"a"}), make_sentence({"x"})}});
  std::ostringstream out;
  write_translations(out, chain, b);
  EXPECT_EQ(out.str(), "a\tx\nq\t\n\na\tx\n\n");
}

TEST(ChainSpec, RelativePathsAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "filtlex_chain_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "chain.tsv");
    f << "# most precise first\nfiltered\tlex/f.tsv\n\nbaseline\t/abs/b.tsv\n";
  }
  const auto spec = load_chain_spec(dir / "chain.tsv");
  ASSERT_EQ(spec.size(), 2u);
  EXPECT_EQ(spec[0].first, "filtered");
  EXPECT_EQ(spec[0].second, dir / "lex/f.tsv");
  EXPECT_EQ(spec[1].second, std::filesystem::path("/abs/b.tsv"));
  {
    std::ofstream f(dir / "bad.tsv");
    f << "just-a-label\n";
  }
  EXPECT_THROW(load_chain_spec(dir / "bad.tsv"), FormatError);
  EXPECT_THROW(load_chain_spec(dir / "missing.tsv"), IoError);
  std::filesystem::remove_all(dir);
}
