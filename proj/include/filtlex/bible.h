#ifndef FILTLEX_BIBLE_H
#define FILTLEX_BIBLE_H

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filtlex/corpus.h"
#include "filtlex/scoring.h"

namespace filtlex {

// precision averages over lexicon headwords seen in the test text;
// percent_correct averages over every source type seen there.
enum class BibleMode { precision, percent_correct };

std::string_view mode_name(BibleMode mode);
// Accepts "precision" and "percent_correct" (or "percent-correct").
BibleMode parse_mode(std::string_view name);

struct TypeStats {
  std::size_t frequency = 0;
  // hits[k-1]: occurrences whose first available translation was the k-th.
  std::vector<std::size_t> hits;

  bool operator==(const TypeStats&) const = default;
};

struct BibleReport {
  BibleMode mode = BibleMode::precision;
  std::size_t n = 0;
  // cumulative_hit_rate[k-1] for k = 1..n
  std::vector<double> cumulative_hit_rate;
  // types the average runs over in this mode
  std::size_t evaluated_types = 0;
  std::size_t lexicon_types = 0;
  std::size_t source_types = 0;
  std::size_t source_tokens = 0;
  std::size_t covered_tokens = 0;
  // covered_tokens / source_tokens
  double recall = 0.0;
  // lexicon_types / source_types
  double recall_by_type = 0.0;
  // every source type in the test text
  std::map<std::string, TypeStats, std::less<>> per_type;
};

// Bitext-based lexicon evaluation. Each source token looks for its ranked
// translations in the paired target sentence; the first one present is a
// hit at that rank and consumes that target token. Per-type cumulative hit
// rates are averaged by type. Results do not depend on `workers`.
BibleReport evaluate(const NBestLexicon& lexicon, const Bitext& test, BibleMode mode, std::size_t workers = 1);

struct RunSummary {
  double mean = 0.0;
  double ci95_half_width = 0.0;
};

// Mean and 1.96 * s / sqrt(n) with the sample standard deviation s.
// Throws ConfigError for fewer than two scores.
RunSummary aggregate_runs(const std::vector<double>& scores);

using Header = std::vector<std::pair<std::string, std::string>>;

void write_report(std::ostream& out, const BibleReport& report, const Header& header = {});

// One row per split (recall, evaluated types, cumulative rates), then a
// `mean` row and a `ci95` row.
void write_split_reports(std::ostream& out, const std::vector<BibleReport>& reports, const Header& header = {});

}  // namespace filtlex

#endif
