// filtlex: induce, evaluate and apply N-best translation lexicons.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "filtlex/commands.h"

namespace {

void add_shared_flags(CLI::App* cmd, filtlex::RunConfig& c) {
  cmd->add_option("--lcsr-cutoff", c.lcsr_cutoff, "minimum LCSR for alphabetic cognates")->capture_default_str();
  cmd->add_option("--min-alpha-len", c.min_alpha_len, "shortest alphabetic word that can be a cognate")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for held-out and split selection")->capture_default_str();
  cmd->add_flag("--tagged", c.tagged, "tokens are surface/TAG");
  cmd->add_flag("--lowercase", c.lowercase, "lowercase all words at load time");
  cmd->add_option("--workers", c.workers, "worker threads (never changes output)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filter-cascade induction and evaluation of N-best translation lexicons"};
  app.require_subcommand(1);

  filtlex::InduceOptions induce;
  auto* induce_cmd = app.add_subcommand("induce", "induce an N-best lexicon from a sentence-aligned bitext");
  add_shared_flags(induce_cmd, induce.config);
  induce_cmd->add_option("source", induce.source, "source side, one sentence per line")->required();
  induce_cmd->add_option("target", induce.target, "target side, one sentence per line")->required();
  induce_cmd->add_option("-o,--output", induce.output, "lexicon TSV to write")->required();
  induce_cmd->add_option("--filters", induce.config.filters, "cascade, e.g. pos,cognate,mrbd,align")
      ->capture_default_str();
  induce_cmd->add_option("--n", induce.config.n, "translations kept per source word")->capture_default_str();
  induce_cmd->add_option("--max-len", induce.config.max_len, "drop pairs with a longer side")->capture_default_str();
  induce_cmd->add_option("--min-cooccurrence", induce.config.min_cooccurrence, "minimum joint count")
      ->capture_default_str();
  induce_cmd->add_option("--tag-map", induce.config.tag_map, "tag table file, or 'default'");
  induce_cmd->add_option("--oracle", induce.config.oracle, "bilingual dictionary TSV");
  induce_cmd->add_option("--test-count", induce.test_count, "pairs held out before training")->capture_default_str();
  induce_cmd->add_option("--test-prefix", induce.test_prefix, "write held-out pairs to PREFIX.src/PREFIX.tgt");
  induce_cmd->add_option("--train-size", induce.train_size, "train on the first K remaining pairs");

  filtlex::EvaluateOptions evaluate;
  std::vector<std::string> test_paths;
  std::string mode = "precision";
  auto* evaluate_cmd = app.add_subcommand("evaluate", "score a lexicon against held-out bitexts");
  add_shared_flags(evaluate_cmd, evaluate.config);
  evaluate_cmd->add_option("lexicon", evaluate.lexicon, "lexicon TSV")->required();
  evaluate_cmd->add_option("tests", test_paths, "test source/target paths, in pairs")->required();
  evaluate_cmd->add_option("-o,--output", evaluate.output, "report TSV to write")->required();
  evaluate_cmd->add_option("--mode", mode, "precision or percent_correct")->capture_default_str();
  evaluate_cmd->add_option("--splits", evaluate.splits, "cut one test bitext into K disjoint parts")
      ->capture_default_str();

  filtlex::TranslateOptions translate;
  auto* translate_cmd = app.add_subcommand("translate", "cascaded back-off translation with several lexicons");
  add_shared_flags(translate_cmd, translate.config);
  translate_cmd->add_option("chain", translate.chain, "lines of label<TAB>lexicon-path")->required();
  translate_cmd->add_option("dev_source", translate.dev_source)->required();
  translate_cmd->add_option("dev_target", translate.dev_target)->required();
  translate_cmd->add_option("test_source", translate.test_source)->required();
  translate_cmd->add_option("test_target", translate.test_target)->required();
  translate_cmd->add_option("-o,--output", translate.output, "translation TSV to write")->required();
  translate_cmd->add_option("--baseline", translate.baseline, "label to compare against (default: last in chain)");

  filtlex::CognatesOptions cognates;
  auto* cognates_cmd = app.add_subcommand("cognates", "list cognate pairs in a bitext");
  add_shared_flags(cognates_cmd, cognates.config);
  cognates_cmd->add_option("source", cognates.source)->required();
  cognates_cmd->add_option("target", cognates.target)->required();
  cognates_cmd->add_option("-o,--output", cognates.output, "TSV to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return filtlex::kExitConfig;
  }

  try {
    if (*induce_cmd) {
      filtlex::run_induce(induce, std::cerr);
    } else if (*evaluate_cmd) {
      if (test_paths.size() % 2 != 0) {
        std::cerr << "error: test bitexts are given as source/target path pairs\n";
        return filtlex::kExitConfig;
      }
      for (std::size_t i = 0; i < test_paths.size(); i += 2) evaluate.tests.emplace_back(test_paths[i], test_paths[i + 1]);
      evaluate.mode = filtlex::parse_mode(mode);
      filtlex::run_evaluate(evaluate, std::cerr);
    } else if (*translate_cmd) {
      filtlex::run_translate(translate, std::cerr);
    } else if (*cognates_cmd) {
      filtlex::run_cognates(cognates, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return filtlex::exit_code_for(e);
  }
  return 0;
}
