#include "filtlex/commands.h"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "filtlex/bible.h"
#include "filtlex/corpus.h"
#include "filtlex/errors.h"
#include "filtlex/io.h"
#include "filtlex/parallel.h"
#include "filtlex/pipeline.h"
#include "filtlex/scoring.h"
#include "filtlex/translate.h"

namespace filtlex {

namespace {

std::string yes_no(bool v) { return v ? "true" : "false"; }

// Everything that can change output bytes; `workers` cannot.
Header config_header(const std::string& command, const RunConfig& c) {
  return {
      {"command", command},
      {"filters", cascade_string(parse_cascade(c.filters))},
      {"n", std::to_string(c.n)},
      {"lcsr_cutoff", format_fixed(c.lcsr_cutoff, 4)},
      {"min_alpha_len", std::to_string(c.min_alpha_len)},
      {"max_len", std::to_string(c.max_len)},
      {"min_cooccurrence", std::to_string(c.min_cooccurrence)},
      {"seed", std::to_string(c.seed)},
      {"tagged", yes_no(c.tagged)},
      {"lowercase", yes_no(c.lowercase)},
      {"tag_map", c.tag_map.value_or("")},
      {"oracle", c.oracle ? c.oracle->string() : ""},
  };
}

void write_header(std::ostream& out, const Header& header) {
  for (const auto& [key, value] : header) out << "# " << key << '=' << value << '\n';
}

LoadOptions load_options(const RunConfig& c, bool tagged) { return {tagged, c.lowercase}; }

std::string stage_name(const std::vector<FilterKind>& filters, std::size_t stage) {
  return stage == 0 ? "cross-product" : std::string(filter_name(filters[stage - 1]));
}

}  // namespace

void run_induce(const InduceOptions& options, std::ostream& log) {
  const RunConfig& c = options.config;
  if (c.n == 0) throw ConfigError("--n must be at least 1");
  if (c.min_cooccurrence == 0) throw ConfigError("--min-cooccurrence must be at least 1");

  CascadeConfig cascade;
  cascade.filters = parse_cascade(c.filters);
  cascade.lcsr = c.lcsr();
  std::optional<TagMatchTable> tags;
  std::optional<OracleList> oracle;
  if (c.tag_map) tags = (*c.tag_map == "default") ? TagMatchTable::common_tag_set() : load_tag_table(*c.tag_map);
  if (c.oracle) oracle = load_oracle_list(*c.oracle, c.lowercase);
  cascade.tags = tags ? &*tags : nullptr;
  cascade.oracle = oracle ? &*oracle : nullptr;
  cascade.validate();

  const bool uses_pos = std::find(cascade.filters.begin(), cascade.filters.end(), FilterKind::pos) != cascade.filters.end();
  const Bitext loaded = load_bitext(options.source, options.target, load_options(c, c.tagged || uses_pos));
  const Bitext restricted = restrict_bitext(loaded, c.max_len);
  BitextSplit split = split_bitext(restricted, options.test_count, c.seed);
  Bitext train = std::move(split.train);
  if (options.train_size) {
    if (*options.train_size > train.size()) {
      throw ConfigError("--train-size " + std::to_string(*options.train_size) + " exceeds the " +
                        std::to_string(train.size()) + " available training pairs");
    }
    std::vector<SentencePair> head(train.pairs().begin(), train.pairs().begin() + *options.train_size);
    train = Bitext(std::move(head));
  }
  if (options.test_prefix) {
    const std::string prefix = options.test_prefix->string();
    save_bitext(split.test, prefix + ".src", prefix + ".tgt");
  }

  Attrition attrition;
  InduceSettings settings{c.n, c.min_cooccurrence, c.workers};
  const NBestLexicon lexicon = induce_lexicon(train, cascade, settings, &attrition);

  Header header = config_header("induce", c);
  header.emplace_back("source", options.source.string());
  header.emplace_back("target", options.target.string());
  header.emplace_back("test_count", std::to_string(options.test_count));
  header.emplace_back("train_size", options.train_size ? std::to_string(*options.train_size) : "all");
  header.emplace_back("pairs_loaded", std::to_string(loaded.size()));
  header.emplace_back("pairs_used", std::to_string(train.size()));
  for (std::size_t s = 0; s < attrition.size(); ++s)
    header.emplace_back("candidates_after_" + stage_name(cascade.filters, s), std::to_string(attrition[s]));
  auto out = open_output(options.output);
  write_lexicon(out, lexicon, header);

  log << "pairs loaded\t" << loaded.size() << '\n'
      << "pairs within max_len\t" << restricted.size() << '\n'
      << "pairs held out\t" << split.test.size() << '\n'
      << "pairs used\t" << train.size() << '\n'
      << "stage\tcandidates\tkept\n";
  for (std::size_t s = 0; s < attrition.size(); ++s) {
    const double kept = attrition[0] == 0 ? 0.0 : static_cast<double>(attrition[s]) / static_cast<double>(attrition[0]);
    log << stage_name(cascade.filters, s) << '\t' << attrition[s] << '\t' << format_fixed(kept, 4) << '\n';
  }
  log << "headwords\t" << lexicon.size() << '\n';
}

void run_evaluate(const EvaluateOptions& options, std::ostream& log) {
  const RunConfig& c = options.config;
  if (options.tests.empty()) throw ConfigError("evaluate needs at least one test bitext");
  if (options.splits == 0) throw ConfigError("--splits must be at least 1");
  if (options.splits > 1 && options.tests.size() > 1)
    throw ConfigError("--splits applies to a single test bitext");

  const NBestLexicon lexicon = load_lexicon(options.lexicon);
  std::vector<Bitext> tests;
  for (const auto& [src, tgt] : options.tests) tests.push_back(load_bitext(src, tgt, load_options(c, c.tagged)));
  if (options.splits > 1) tests = partition_bitext(tests.front(), options.splits, c.seed);

  std::vector<BibleReport> reports;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    reports.push_back(evaluate(lexicon, tests[i], options.mode, c.workers));
    if (reports.back().lexicon_types == 0)
      log << "warning: test set " << i << " shares no source vocabulary with the lexicon; its score carries no information\n";
  }

  Header header = {{"command", "evaluate"},
                   {"lexicon", options.lexicon.string()},
                   {"mode", std::string(mode_name(options.mode))},
                   {"n", std::to_string(lexicon.n_max())},
                   {"splits", std::to_string(options.splits)},
                   {"seed", std::to_string(c.seed)},
                   {"tagged", yes_no(c.tagged)},
                   {"lowercase", yes_no(c.lowercase)}};
  for (std::size_t i = 0; i < options.tests.size(); ++i) {
    header.emplace_back("test_source_" + std::to_string(i), options.tests[i].first.string());
    header.emplace_back("test_target_" + std::to_string(i), options.tests[i].second.string());
  }
  auto out = open_output(options.output);
  if (reports.size() == 1)
    write_report(out, reports.front(), header);
  else
    write_split_reports(out, reports, header);

  for (std::size_t i = 0; i < reports.size(); ++i) {
    log << "test " << i << "\t" << mode_name(options.mode) << "@1\t" << format_fixed(reports[i].cumulative_hit_rate[0])
        << "\trecall\t" << format_fixed(reports[i].recall) << '\n';
  }
  if (reports.size() >= 2) {
    std::vector<double> first;
    for (const auto& r : reports) first.push_back(r.cumulative_hit_rate[0]);
    const RunSummary s = aggregate_runs(first);
    log << "mean@1\t" << format_fixed(s.mean) << "\tci95\t" << format_fixed(s.ci95_half_width) << '\n';
  }
}

void run_translate(const TranslateOptions& options, std::ostream& log) {
  const RunConfig& c = options.config;
  const auto spec = load_chain_spec(options.chain);
  std::vector<LabeledLexicon> lexicons;
  std::set<std::string> labels;
  for (const auto& [label, path] : spec) {
    if (!labels.insert(label).second) throw ConfigError("chain label '" + label + "' is listed twice");
    lexicons.emplace_back(label, load_lexicon(path));
  }
  const std::string baseline_label = options.baseline.value_or(spec.back().first);
  if (!labels.count(baseline_label)) throw ConfigError("baseline '" + baseline_label + "' is not in the chain");

  const Bitext dev = load_bitext(options.dev_source, options.dev_target, load_options(c, c.tagged));
  const Bitext test = load_bitext(options.test_source, options.test_target, load_options(c, c.tagged));
  const BackoffChain chain = order_chain(std::move(lexicons), dev, c.workers);

  const ChainLink* baseline = nullptr;
  for (const auto& link : chain.links()) {
    if (link.label == baseline_label) baseline = &link;
  }
  const BackoffChain baseline_chain({*baseline});

  const TokenScore score = score_tokens(chain, test, c.workers);
  const TokenScore base = score_tokens(baseline_chain, test, c.workers);
  const double ratio = base.percent_correct() > 0.0 ? score.percent_correct() / base.percent_correct() : 0.0;

  Header header = {{"command", "translate"},
                   {"chain", options.chain.string()},
                   {"dev_source", options.dev_source.string()},
                   {"dev_target", options.dev_target.string()},
                   {"test_source", options.test_source.string()},
                   {"test_target", options.test_target.string()},
                   {"baseline", baseline_label},
                   {"tagged", yes_no(c.tagged)},
                   {"lowercase", yes_no(c.lowercase)}};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    header.emplace_back("chain_" + std::to_string(i + 1),
                        chain.links()[i].label + " dev_precision=" + format_fixed(chain.links()[i].measured_precision));
  }
  header.emplace_back("tokens", std::to_string(score.tokens));
  header.emplace_back("translated", std::to_string(score.translated));
  header.emplace_back("percent_correct", format_fixed(score.percent_correct()));
  header.emplace_back("baseline_percent_correct", format_fixed(base.percent_correct()));
  header.emplace_back("ratio_vs_baseline", format_fixed(ratio));

  auto out = open_output(options.output);
  write_header(out, header);
  write_translations(out, chain, test);

  log << "rank\tlabel\tdev_precision\n";
  for (std::size_t i = 0; i < chain.size(); ++i)
    log << (i + 1) << '\t' << chain.links()[i].label << '\t' << format_fixed(chain.links()[i].measured_precision) << '\n';
  log << "tokens\t" << score.tokens << "\ntranslated\t" << score.translated << "\npercent_correct\t"
      << format_fixed(score.percent_correct()) << "\nbaseline_percent_correct\t" << format_fixed(base.percent_correct())
      << "\nratio_vs_baseline\t" << format_fixed(ratio) << '\n';
}

void run_cognates(const CognatesOptions& options, std::ostream& log) {
  const RunConfig& c = options.config;
  const LcsrParams params = c.lcsr();
  params.validate();
  const Bitext bitext = load_bitext(options.source, options.target, load_options(c, c.tagged));

  struct Chunk {
    std::string rows;
    std::size_t matched = 0;
    std::size_t tokens = 0;
  };
  auto chunks = map_ranges(bitext.size(), c.workers, [&](std::size_t begin, std::size_t end) {
    Chunk chunk;
    std::ostringstream rows;
    for (std::size_t p = begin; p < end; ++p) {
      const auto& pair = bitext.pairs()[p];
      std::set<std::size_t> matched;
      for (const auto& locus : cognate_matches(pair, params)) {
        const auto& s = pair.source[locus.source_pos].surface;
        const auto& t = pair.target[locus.target_pos].surface;
        rows << pair.id << '\t' << locus.source_pos << '\t' << locus.target_pos << '\t' << s << '\t' << t << '\t'
             << format_fixed(lcsr(s, t), 4) << '\n';
        matched.insert(locus.source_pos);
      }
      chunk.matched += matched.size();
      chunk.tokens += pair.source.size();
    }
    chunk.rows = rows.str();
    return chunk;
  });

  std::size_t matched = 0, tokens = 0;
  for (const auto& chunk : chunks) {
    matched += chunk.matched;
    tokens += chunk.tokens;
  }
  const double fraction = tokens == 0 ? 0.0 : static_cast<double>(matched) / static_cast<double>(tokens);

  Header header = {{"command", "cognates"},
                   {"source", options.source.string()},
                   {"target", options.target.string()},
                   {"lcsr_cutoff", format_fixed(params.cutoff, 4)},
                   {"min_alpha_len", std::to_string(params.min_alpha_len)},
                   {"tagged", yes_no(c.tagged)},
                   {"lowercase", yes_no(c.lowercase)}};
  auto out = open_output(options.output);
  write_header(out, header);
  out << "pair_id\tsource_pos\ttarget_pos\tsource\ttarget\tlcsr\n";
  for (const auto& chunk : chunks) out << chunk.rows;
  out << "# matched_source_tokens=" << matched << '\n'
      << "# source_tokens=" << tokens << '\n'
      << "# matched_source_fraction=" << format_fixed(fraction) << '\n';

  log << "pairs\t" << bitext.size() << "\nsource tokens\t" << tokens << "\nmatched source tokens\t" << matched
      << "\nfraction\t" << format_fixed(fraction) << '\n';
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const ConfigError*>(&error)) return kExitConfig;
  if (dynamic_cast<const FormatError*>(&error)) return kExitFormat;
  if (dynamic_cast<const ContractError*>(&error)) return kExitContract;
  if (dynamic_cast<const IoError*>(&error)) return kExitIo;
  return 1;
}

}  // namespace filtlex
