#ifndef FILTLEX_TRANSLATE_H
#define FILTLEX_TRANSLATE_H

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filtlex/corpus.h"
#include "filtlex/scoring.h"

namespace filtlex {

struct ChainLink {
  std::string label;
  NBestLexicon lexicon;
  double measured_precision = 0.0;
};

// Lexicons ordered from most to least precise. A word is translated by the
// first lexicon that has it.
class BackoffChain {
 public:
  // Throws ConfigError if empty or if precision increases along the chain.
  explicit BackoffChain(std::vector<ChainLink> links);

  const std::vector<ChainLink>& links() const { return links_; }
  std::size_t size() const { return links_.size(); }

 private:
  std::vector<ChainLink> links_;
};

using LabeledLexicon = std::pair<std::string, NBestLexicon>;

// Measures each lexicon's 1-best precision on `dev` and sorts by it,
// descending, breaking ties by label.
BackoffChain order_chain(std::vector<LabeledLexicon> lexicons, const Bitext& dev, std::size_t workers = 1);

// Rank-1 translation from the first lexicon containing `word`.
std::optional<std::string> translate_word(std::string_view word, const BackoffChain& chain);

struct TokenScore {
  std::size_t tokens = 0;
  std::size_t translated = 0;
  std::size_t correct = 0;

  double percent_correct() const { return tokens == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(tokens); }
};

// A translation is correct when it matches a target token of the pair not
// already consumed by an earlier source token; the leftmost match is
// consumed. Throws ConfigError for an empty test bitext.
TokenScore score_tokens(const BackoffChain& chain, const Bitext& test, std::size_t workers = 1);
double score_corpus(const BackoffChain& chain, const Bitext& test, std::size_t workers = 1);

// `source_token<TAB>translation` per token (empty translation when no
// lexicon knows the word), a blank line after each sentence.
void write_translations(std::ostream& out, const BackoffChain& chain, const Bitext& text);

// Lines `label<TAB>lexicon-path`. Relative paths are resolved against the
// directory of the chain file.
std::vector<std::pair<std::string, std::filesystem::path>> load_chain_spec(const std::filesystem::path& path);

}  // namespace filtlex

#endif
