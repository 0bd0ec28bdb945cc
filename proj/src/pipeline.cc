#include "filtlex/pipeline.h"

#include "filtlex/parallel.h"

namespace filtlex {

NBestLexicon induce_lexicon(const Bitext& train, const CascadeConfig& cascade, const InduceSettings& settings,
                            Attrition* attrition) {
  cascade.validate();
  struct Partial {
    CooccurrenceCounter counter;
    Attrition attrition;
  };
  auto parts = map_ranges(train.size(), settings.workers, [&](std::size_t begin, std::size_t end) {
    Partial part;
    part.attrition.assign(cascade.filters.size() + 1, 0);
    Attrition stages;
    for (std::size_t p = begin; p < end; ++p) {
      part.counter.add(run_cascade(train.pairs()[p], cascade, &stages));
      for (std::size_t s = 0; s < stages.size(); ++s) part.attrition[s] += stages[s];
    }
    return part;
  });

  CooccurrenceCounter counter;
  Attrition totals(cascade.filters.size() + 1, 0);
  for (const auto& part : parts) {
    counter.merge(part.counter);
    for (std::size_t s = 0; s < totals.size(); ++s) totals[s] += part.attrition[s];
  }
  if (attrition) *attrition = std::move(totals);
  return build_lexicon(counter.tables(train), settings.n, settings.min_cooccurrence);
}

}  // namespace filtlex
