#ifndef FILTLEX_SYNTHETIC_H
#define FILTLEX_SYNTHETIC_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "filtlex/corpus.h"

namespace filtlex {

// Knobs for a toy bitext generated from a known word-for-word map.
struct SyntheticConfig {
  std::size_t pairs = 700;
  std::size_t vocabulary = 1000;
  std::size_t min_len = 6;
  std::size_t max_len = 14;
  // chance that a target token is replaced by a random target word
  double noise = 0.2;
  // chance that two neighbouring target tokens are swapped
  double swap = 0.1;
  // share of types whose translation is spelled like the source word
  double cognate_fraction = 0.25;
  // share of types listed in the generated dictionary
  double oracle_fraction = 0.45;
  // Zipf exponent of source word frequencies
  double zipf = 1.0;
  bool tagged = false;
  std::uint64_t seed = 1;
};

struct SyntheticCorpus {
  Bitext bitext;
  OracleList oracle;
  std::map<std::string, std::string> truth;
  // source types generated with a cognate translation
  std::size_t cognate_types = 0;
};

// Every sentence ends with "." on both sides. Deterministic in the config.
SyntheticCorpus make_synthetic(const SyntheticConfig& config);

}  // namespace filtlex

#endif
