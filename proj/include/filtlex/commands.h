#ifndef FILTLEX_COMMANDS_H
#define FILTLEX_COMMANDS_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filtlex/bible.h"
#include "filtlex/filters.h"

namespace filtlex {

// Settings shared by the subcommands. Defaults are the published ones:
// 7-best lexicons, LCSR cutoff 0.58, sentences under 16 tokens.
struct RunConfig {
  std::string filters;
  std::size_t n = 7;
  double lcsr_cutoff = 0.58;
  std::size_t min_alpha_len = 2;
  std::size_t max_len = 15;
  std::uint64_t min_cooccurrence = 1;
  std::uint64_t seed = 0;
  bool tagged = false;
  bool lowercase = false;
  // path, or "default" for the built-in common tag set
  std::optional<std::string> tag_map;
  std::optional<std::filesystem::path> oracle;
  std::size_t workers = 1;

  LcsrParams lcsr() const { return {lcsr_cutoff, min_alpha_len}; }
};

struct InduceOptions {
  RunConfig config;
  std::filesystem::path source;
  std::filesystem::path target;
  std::filesystem::path output;
  // pairs held out before training, chosen by `config.seed`
  std::size_t test_count = 0;
  // writes the held-out pairs to PREFIX.src / PREFIX.tgt
  std::optional<std::filesystem::path> test_prefix;
  // trains on only the first K remaining pairs
  std::optional<std::size_t> train_size;
};

struct EvaluateOptions {
  RunConfig config;
  std::filesystem::path lexicon;
  // (source, target) paths of each test bitext
  std::vector<std::pair<std::filesystem::path, std::filesystem::path>> tests;
  BibleMode mode = BibleMode::precision;
  // cuts a single test bitext into this many disjoint parts
  std::size_t splits = 1;
  std::filesystem::path output;
};

struct TranslateOptions {
  RunConfig config;
  std::filesystem::path chain;
  std::filesystem::path dev_source;
  std::filesystem::path dev_target;
  std::filesystem::path test_source;
  std::filesystem::path test_target;
  std::filesystem::path output;
  // label of the lexicon improvements are measured against; defaults to the
  // last line of the chain file
  std::optional<std::string> baseline;
};

struct CognatesOptions {
  RunConfig config;
  std::filesystem::path source;
  std::filesystem::path target;
  std::filesystem::path output;
};

// Each command writes its output file and prints a short summary to `log`.
void run_induce(const InduceOptions& options, std::ostream& log);
void run_evaluate(const EvaluateOptions& options, std::ostream& log);
void run_translate(const TranslateOptions& options, std::ostream& log);
void run_cognates(const CognatesOptions& options, std::ostream& log);

// Process exit status for an exception escaping a command.
int exit_code_for(const std::exception& error);

inline constexpr int kExitConfig = 2;
inline constexpr int kExitFormat = 3;
inline constexpr int kExitContract = 4;
inline constexpr int kExitIo = 5;

}  // namespace filtlex

#endif
