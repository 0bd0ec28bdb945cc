// Writes a synthetic bitext with a known translation map, plus a dictionary
// covering part of it. Handy for trying the toolkit without real data.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "filtlex/corpus.h"
#include "filtlex/io.h"
#include "filtlex/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic sentence-aligned bitext"};
  filtlex::SyntheticConfig config;
  std::string prefix;
  app.add_option("prefix", prefix, "writes PREFIX.src, PREFIX.tgt, PREFIX.oracle.tsv, PREFIX.truth.tsv")->required();
  app.add_option("--pairs", config.pairs)->capture_default_str();
  app.add_option("--vocabulary", config.vocabulary)->capture_default_str();
  app.add_option("--min-len", config.min_len)->capture_default_str();
  app.add_option("--max-len", config.max_len)->capture_default_str();
  app.add_option("--zipf", config.zipf)->capture_default_str();
  app.add_option("--noise", config.noise)->capture_default_str();
  app.add_option("--swap", config.swap)->capture_default_str();
  app.add_option("--cognate-fraction", config.cognate_fraction)->capture_default_str();
  app.add_option("--oracle-fraction", config.oracle_fraction)->capture_default_str();
  app.add_option("--seed", config.seed)->capture_default_str();
  app.add_flag("--tagged", config.tagged);
  CLI11_PARSE(app, argc, argv);

  try {
    const auto corpus = filtlex::make_synthetic(config);
    filtlex::save_bitext(corpus.bitext, prefix + ".src", prefix + ".tgt");
    auto oracle = filtlex::open_output(prefix + ".oracle.tsv");
    for (const auto& [s, t] : corpus.oracle.pairs()) oracle << s << '\t' << t << '\n';
    auto truth = filtlex::open_output(prefix + ".truth.tsv");
    for (const auto& [s, t] : corpus.truth) truth << s << '\t' << t << '\n';
    std::cerr << "pairs\t" << corpus.bitext.size() << "\nsource types\t" << corpus.bitext.source_vocab().size()
              << "\ncognate types\t" << corpus.cognate_types << "\noracle pairs\t" << corpus.oracle.size() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
