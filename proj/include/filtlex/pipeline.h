#ifndef FILTLEX_PIPELINE_H
#define FILTLEX_PIPELINE_H

#include <cstddef>
#include <cstdint>

#include "filtlex/corpus.h"
#include "filtlex/filters.h"
#include "filtlex/scoring.h"

namespace filtlex {

struct InduceSettings {
  std::size_t n = 7;
  std::uint64_t min_cooccurrence = 1;
  std::size_t workers = 1;
};

// Candidate generation, the filter cascade, co-occurrence counting and
// N-best ranking over every pair of `train`. When `attrition` is given it
// receives the corpus-wide candidate counts after each stage. The lexicon
// is identical for every worker count.
NBestLexicon induce_lexicon(const Bitext& train, const CascadeConfig& cascade, const InduceSettings& settings,
                            Attrition* attrition = nullptr);

}  // namespace filtlex

#endif
