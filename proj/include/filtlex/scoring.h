#ifndef FILTLEX_SCORING_H
#define FILTLEX_SCORING_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "filtlex/corpus.h"
#include "filtlex/filters.h"

namespace filtlex {

// Presence/absence counts over sentence pairs for one (S, T):
// a = S and T both present (and the pairing survived filtering),
// b = S without a surviving T, c = T without a surviving S, d = the rest
// (floored at 0 when filtered co-presences outnumber pairs with neither).
struct ContingencyTable {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;

  std::uint64_t total() const { return a + b + c + d; }
  bool operator==(const ContingencyTable&) const = default;
};

// Binomial log-likelihood ratio G^2 for the table. Zero when a margin is
// zero or the table is exactly independent (a*d == b*c). Throws
// ContractError for the all-zero table.
double g2(const ContingencyTable& table);

// g2 with the sign of a*d - b*c: negative when S and T avoid each other.
double signed_g2(const ContingencyTable& table);

using WordPair = std::pair<std::string, std::string>;

struct WordPairHash {
  std::size_t operator()(const WordPair& p) const noexcept;
};

// Counts, per (S, T), the sentence pairs in which at least one candidate
// (S, T) survived filtering. Partial counters over disjoint pair sets merge
// by addition.
class CooccurrenceCounter {
 public:
  // `cands` may span several pairs; each (pair, S, T) counts once.
  void add(const Candidates& cands);
  void merge(const CooccurrenceCounter& other);

  std::size_t joint(const std::string& source, const std::string& target) const;
  std::size_t size() const { return joint_.size(); }

  // Full tables with margins from the unfiltered corpus, ordered by (S, T).
  std::map<WordPair, ContingencyTable> tables(const Bitext& corpus) const;

 private:
  std::unordered_map<WordPair, std::size_t, WordPairHash> joint_;
};

// Throws ContractError if a candidate's pair id is not in the corpus.
std::map<WordPair, ContingencyTable> count_cooccurrences(const Candidates& cands, const Bitext& corpus);

struct LexiconEntry {
  std::string target;
  double score = 0.0;
  std::uint64_t cooccurrence = 0;

  bool operator==(const LexiconEntry&) const = default;
};

// Up to N ranked translations per source word.
class NBestLexicon {
 public:
  explicit NBestLexicon(std::size_t n_max = 1);

  std::size_t n_max() const { return n_max_; }

  // Replaces the entry list of `source`. Throws ContractError if the list is
  // longer than N, repeats a target or is not sorted by non-increasing score.
  void set_entries(const std::string& source, std::vector<LexiconEntry> entries);

  // nullptr when `source` is not a headword.
  const std::vector<LexiconEntry>* find(std::string_view source) const;
  bool contains(std::string_view source) const { return find(source) != nullptr; }
  std::optional<std::string> best(std::string_view source) const;

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, std::vector<LexiconEntry>, std::less<>>& entries() const { return entries_; }

  bool operator==(const NBestLexicon&) const = default;

 private:
  std::size_t n_max_;
  std::map<std::string, std::vector<LexiconEntry>, std::less<>> entries_;
};

// Ranks each source word's targets by signed G^2 (descending), then joint count
// (descending), then target bytes (ascending), and keeps the first n whose
// joint count reaches min_cooccurrence.
NBestLexicon build_lexicon(const std::map<WordPair, ContingencyTable>& counts, std::size_t n,
                           std::uint64_t min_cooccurrence = 1);

// `source<TAB>rank<TAB>target<TAB>score<TAB>cooccurrence` per line, preceded
// by `# key=value` header lines. The header always records `n`.
void write_lexicon(std::ostream& out, const NBestLexicon& lexicon,
                   const std::vector<std::pair<std::string, std::string>>& header = {});
NBestLexicon read_lexicon(std::istream& in);
NBestLexicon load_lexicon(const std::filesystem::path& path);

// Fixed-point decimal rendering used by every file writer.
std::string format_fixed(double value, int digits = 6);

}  // namespace filtlex

#endif
