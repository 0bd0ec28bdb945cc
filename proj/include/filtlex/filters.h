#ifndef FILTLEX_FILTERS_H
#define FILTLEX_FILTERS_H

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "filtlex/cognate.h"
#include "filtlex/corpus.h"

namespace filtlex {

// One (source word, target word) hypothesis drawn from one sentence pair.
struct CandidatePair {
  std::string source_word;
  std::string target_word;
  std::size_t source_pos = 0;
  std::size_t target_pos = 0;
  PairId pair_id = 0;

  bool operator==(const CandidatePair&) const = default;
  auto operator<=>(const CandidatePair&) const = default;
};

// A multiset; order follows generation order (source-major).
using Candidates = std::vector<CandidatePair>;

// Remaps tagger-specific tags onto a small common tag set and says which
// common tags may translate each other.
class TagMatchTable {
 public:
  // The common tag set tuned for French/English (CD, CJ, D, EOP, EOS, IN,
  // J, N, NP, P, R, SCM, UH, V, VBG, VBN).
  static TagMatchTable common_tag_set();

  // Declares `coarse` and the tags it matches. Every tag matches itself.
  void add_matches(const std::string& coarse, const std::vector<std::string>& matches);
  void add_remap(const std::string& fine, const std::string& coarse);

  // Throws ConfigError if a match or remap names a tag that was never declared.
  void validate() const;

  // The coarse tag for `tag`: its remap if it has one, else itself if it is
  // a declared coarse tag.
  std::optional<std::string> coarse(std::string_view tag) const;

  bool matches(std::string_view source_coarse, std::string_view target_coarse) const;

  const std::map<std::string, std::set<std::string, std::less<>>, std::less<>>& match_sets() const {
    return match_sets_;
  }
  const std::map<std::string, std::string, std::less<>>& remaps() const { return remap_; }

 private:
  std::map<std::string, std::set<std::string, std::less<>>, std::less<>> match_sets_;
  std::map<std::string, std::string, std::less<>> remap_;
};

// Line format: `FINE -> COARSE` or `COARSE: A,B,C`. Blank lines and lines
// starting with '#' are ignored.
TagMatchTable read_tag_table(std::istream& in);
TagMatchTable load_tag_table(const std::filesystem::path& path);
void write_tag_table(std::ostream& out, const TagMatchTable& table);

enum class LocusKind { dictionary, cognate };

// A trusted position pairing inside one sentence pair.
struct Locus {
  std::size_t source_pos = 0;
  std::size_t target_pos = 0;
  LocusKind kind = LocusKind::dictionary;

  bool operator==(const Locus&) const = default;
  auto operator<=>(const Locus&) const = default;
};

enum class FilterKind { pos, mrbd, cognate, align };

std::string_view filter_name(FilterKind kind);

// Parses `pos,cognate,mrbd,align`. Empty string is the empty cascade.
// Unknown or repeated names throw ConfigError.
std::vector<FilterKind> parse_cascade(std::string_view spec);
std::string cascade_string(const std::vector<FilterKind>& filters);

struct CascadeConfig {
  std::vector<FilterKind> filters;
  LcsrParams lcsr;
  // Non-owning. Required by `mrbd` and `pos` respectively.
  const OracleList* oracle = nullptr;
  const TagMatchTable* tags = nullptr;

  // Throws ConfigError naming the first filter whose resource is missing.
  void validate() const;
};

// Every (source position, target position) combination.
Candidates generate_candidates(const SentencePair& pair);

Candidates pos_filter(const Candidates& cands, const SentencePair& pair, const TagMatchTable& table);

// Position pairs whose surfaces form an oracle pair.
std::vector<Locus> oracle_matches(const SentencePair& pair, const OracleList& oracle);
// Position pairs whose tokens are cognates.
std::vector<Locus> cognate_matches(const SentencePair& pair, const LcsrParams& params);

// Removes every candidate that pairs a matched position with anything other
// than one of its locus partners.
Candidates oracle_filter(const Candidates& cands, const std::vector<Locus>& matches);

// Largest subset with at most one locus per position on each side and no two
// loci crossing; among those, the lexicographically smallest by position.
std::vector<Locus> select_loci(const std::vector<Locus>& matches);

// Keeps a candidate only if it lies on the same side of every locus in both
// sentences, or coincides with the locus. Throws ContractError if the loci
// are not sorted and pairwise non-crossing.
Candidates alignment_filter(const Candidates& cands, const std::vector<Locus>& loci);

// Candidate counts after generation and after each configured filter.
using Attrition = std::vector<std::size_t>;

Candidates run_cascade(const SentencePair& pair, const CascadeConfig& config, Attrition* attrition = nullptr);

}  // namespace filtlex

#endif
