#include "filtlex/bible.h"

#include <cmath>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "filtlex/errors.h"
#include "filtlex/parallel.h"

namespace filtlex {

namespace {

struct Partial {
  std::unordered_map<std::string, TypeStats> stats;
  std::size_t tokens = 0;
  std::size_t covered = 0;
};

Partial evaluate_range(const NBestLexicon& lexicon, const Bitext& test, std::size_t begin, std::size_t end) {
  Partial part;
  const std::size_t n = lexicon.n_max();
  std::unordered_map<std::string_view, std::size_t> available;
  for (std::size_t p = begin; p < end; ++p) {
    const auto& pair = test.pairs()[p];
    available.clear();
    for (const auto& t : pair.target) ++available[t.surface];
    for (const auto& s : pair.source) {
      auto& stats = part.stats[s.surface];
      if (stats.hits.empty()) stats.hits.assign(n, 0);
      ++stats.frequency;
      ++part.tokens;
      const auto* translations = lexicon.find(s.surface);
      if (!translations) continue;
      ++part.covered;
      const std::size_t limit = std::min(n, translations->size());
      for (std::size_t k = 0; k < limit; ++k) {
        auto it = available.find((*translations)[k].target);
        if (it != available.end() && it->second > 0) {
          --it->second;
          ++stats.hits[k];
          break;
        }
      }
    }
  }
  return part;
}

void write_header(std::ostream& out, const Header& header) {
  for (const auto& [key, value] : header) out << "# " << key << '=' << value << '\n';
}

}  // namespace

std::string_view mode_name(BibleMode mode) {
  return mode == BibleMode::precision ? "precision" : "percent_correct";
}

BibleMode parse_mode(std::string_view name) {
  if (name == "precision") return BibleMode::precision;
  if (name == "percent_correct" || name == "percent-correct") return BibleMode::percent_correct;
  throw ConfigError("unknown evaluation mode '" + std::string(name) + "' (expected precision or percent_correct)");
}

BibleReport evaluate(const NBestLexicon& lexicon, const Bitext& test, BibleMode mode, std::size_t workers) {
  const std::size_t n = lexicon.n_max();
  if (n == 0) throw ConfigError("lexicon has N = 0");

  auto parts = map_ranges(test.size(), workers, [&](std::size_t b, std::size_t e) {
    return evaluate_range(lexicon, test, b, e);
  });

  BibleReport report;
  report.mode = mode;
  report.n = n;
  for (auto& part : parts) {
    report.source_tokens += part.tokens;
    report.covered_tokens += part.covered;
    for (auto& [word, stats] : part.stats) {
      auto& total = report.per_type[word];
      if (total.hits.empty()) total.hits.assign(n, 0);
      total.frequency += stats.frequency;
      for (std::size_t k = 0; k < n; ++k) total.hits[k] += stats.hits[k];
    }
  }

  report.source_types = report.per_type.size();
  std::vector<double> sums(n, 0.0);
  for (const auto& [word, stats] : report.per_type) {
    const bool in_lexicon = lexicon.contains(word);
    if (in_lexicon) ++report.lexicon_types;
    if (mode == BibleMode::precision && !in_lexicon) continue;
    ++report.evaluated_types;
    // integer prefix sums keep each per-type rate within [0, 1] exactly
    std::size_t cumulative_hits = 0;
    for (std::size_t k = 0; k < n; ++k) {
      cumulative_hits += stats.hits[k];
      sums[k] += static_cast<double>(cumulative_hits) / static_cast<double>(stats.frequency);
    }
  }
  report.cumulative_hit_rate.assign(n, 0.0);
  if (report.evaluated_types > 0) {
    for (std::size_t k = 0; k < n; ++k)
      report.cumulative_hit_rate[k] = sums[k] / static_cast<double>(report.evaluated_types);
  }
  if (report.source_tokens > 0)
    report.recall = static_cast<double>(report.covered_tokens) / static_cast<double>(report.source_tokens);
  if (report.source_types > 0)
    report.recall_by_type = static_cast<double>(report.lexicon_types) / static_cast<double>(report.source_types);
  return report;
}

RunSummary aggregate_runs(const std::vector<double>& scores) {
  if (scores.size() < 2)
    throw ConfigError("confidence intervals need at least 2 scores, got " + std::to_string(scores.size()));
  const double count = static_cast<double>(scores.size());
  const double mean = std::accumulate(scores.begin(), scores.end(), 0.0) / count;
  double ss = 0.0;
  for (double s : scores) ss += (s - mean) * (s - mean);
  const double sd = std::sqrt(ss / (count - 1.0));
  return {mean, 1.96 * sd / std::sqrt(count)};
}

void write_report(std::ostream& out, const BibleReport& report, const Header& header) {
  write_header(out, header);
  out << "k\tcumulative_hit_rate\n";
  for (std::size_t k = 0; k < report.cumulative_hit_rate.size(); ++k)
    out << (k + 1) << '\t' << format_fixed(report.cumulative_hit_rate[k]) << '\n';
  out << "recall\t" << format_fixed(report.recall) << '\n';
  out << "recall_by_type\t" << format_fixed(report.recall_by_type) << '\n';
  out << "evaluated_types\t" << report.evaluated_types << '\n';
  out << "lexicon_types\t" << report.lexicon_types << '\n';
  out << "source_types\t" << report.source_types << '\n';
  out << "source_tokens\t" << report.source_tokens << '\n';
  out << "mode\t" << mode_name(report.mode) << '\n';
}

void write_split_reports(std::ostream& out, const std::vector<BibleReport>& reports, const Header& header) {
  if (reports.empty()) throw ConfigError("no split reports to write");
  const std::size_t n = reports.front().n;
  write_header(out, header);
  out << "split\trecall\tevaluated_types";
  for (std::size_t k = 1; k <= n; ++k) out << "\tcum@" << k;
  out << '\n';
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out << i << '\t' << format_fixed(reports[i].recall) << '\t' << reports[i].evaluated_types;
    for (double r : reports[i].cumulative_hit_rate) out << '\t' << format_fixed(r);
    out << '\n';
  }
  if (reports.size() >= 2) {
    const auto summarize = [&](auto get) {
      std::vector<double> column;
      for (const auto& r : reports) column.push_back(get(r));
      return aggregate_runs(column);
    };
    const RunSummary recall = summarize([](const BibleReport& r) { return r.recall; });
    const RunSummary types =
        summarize([](const BibleReport& r) { return static_cast<double>(r.evaluated_types); });
    std::vector<RunSummary> rates;
    for (std::size_t k = 0; k < n; ++k)
      rates.push_back(summarize([k](const BibleReport& r) { return r.cumulative_hit_rate[k]; }));
    out << "mean\t" << format_fixed(recall.mean) << '\t' << format_fixed(types.mean, 2);
    for (const auto& s : rates) out << '\t' << format_fixed(s.mean);
    out << '\n';
    out << "ci95\t" << format_fixed(recall.ci95_half_width) << '\t' << format_fixed(types.ci95_half_width, 2);
    for (const auto& s : rates) out << '\t' << format_fixed(s.ci95_half_width);
    out << '\n';
  }
  out << "mode\t" << mode_name(reports.front().mode) << '\n';
}

}  // namespace filtlex
