#ifndef FILTLEX_CORPUS_H
#define FILTLEX_CORPUS_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace filtlex {

using PairId = std::size_t;

struct Token {
  std::string surface;
  std::optional<std::string> tag;
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

// Builds a sentence from surfaces, numbering positions from 0.
Sentence make_sentence(const std::vector<std::string>& surfaces);

struct SentencePair {
  PairId id = 0;
  Sentence source;
  Sentence target;

  bool operator==(const SentencePair&) const = default;
};

// Word types with document frequency: the number of pairs whose side
// contains the type at least once.
class Vocabulary {
 public:
  void add_sentence(const Sentence& sentence);

  std::size_t doc_freq(std::string_view word) const;
  bool contains(std::string_view word) const { return doc_freq(word) > 0; }
  std::size_t size() const { return freq_.size(); }

  auto begin() const { return freq_.begin(); }
  auto end() const { return freq_.end(); }

  bool operator==(const Vocabulary&) const = default;

 private:
  std::map<std::string, std::size_t, std::less<>> freq_;
};

// An ordered collection of sentence pairs. Pairs are validated on
// construction and immutable afterwards.
class Bitext {
 public:
  Bitext() = default;
  explicit Bitext(std::vector<SentencePair> pairs);

  const std::vector<SentencePair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  const Vocabulary& source_vocab() const { return source_vocab_; }
  const Vocabulary& target_vocab() const { return target_vocab_; }

  // nullptr when no pair carries this id.
  const SentencePair* find(PairId id) const;

  // Every token on both sides carries a tag.
  bool tagged() const;

 private:
  std::vector<SentencePair> pairs_;
  std::unordered_map<PairId, std::size_t> index_;
  Vocabulary source_vocab_;
  Vocabulary target_vocab_;
};

struct LoadOptions {
  bool tagged = false;
  bool lowercase = false;
};

Bitext read_bitext(std::istream& source, std::istream& target, const LoadOptions& options = {});
Bitext load_bitext(const std::filesystem::path& source_path,
                   const std::filesystem::path& target_path,
                   const LoadOptions& options = {});

// Writes one sentence per line; tags are appended as `/TAG` when present.
void write_sentences(std::ostream& out, const Bitext& bitext, bool source_side);
void save_bitext(const Bitext& bitext,
                 const std::filesystem::path& source_path,
                 const std::filesystem::path& target_path);

// Keeps the pairs whose sides are both at most max_len tokens long.
Bitext restrict_bitext(const Bitext& bitext, std::size_t max_len);

struct BitextSplit {
  Bitext train;
  Bitext test;
};

// Seeded permutation of pair indexes. Identical for identical (n, seed) on
// every platform: the shuffle does not depend on std:: distributions.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

// Reserves test_count randomly chosen pairs for testing. Both halves keep
// the input order.
BitextSplit split_bitext(const Bitext& bitext, std::size_t test_count, std::uint64_t seed);

// Cuts the bitext into `parts` disjoint slices of a seeded permutation.
std::vector<Bitext> partition_bitext(const Bitext& bitext, std::size_t parts, std::uint64_t seed);

// Trusted translation pairs, e.g. from a bilingual dictionary.
class OracleList {
 public:
  OracleList() = default;
  explicit OracleList(const std::vector<std::pair<std::string, std::string>>& pairs);

  void insert(std::string source, std::string target);
  bool contains(std::string_view source, std::string_view target) const;

  // Empty set when the word has no entry.
  const std::set<std::string, std::less<>>& targets_of(std::string_view source) const;
  const std::set<std::string, std::less<>>& sources_of(std::string_view target) const;

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::set<std::pair<std::string, std::string>>& pairs() const { return pairs_; }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
  std::map<std::string, std::set<std::string, std::less<>>, std::less<>> by_source_;
  std::map<std::string, std::set<std::string, std::less<>>, std::less<>> by_target_;
};

OracleList read_oracle_list(std::istream& in, bool lowercase = false);
OracleList load_oracle_list(const std::filesystem::path& path, bool lowercase = false);

}  // namespace filtlex

#endif
