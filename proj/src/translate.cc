#include "filtlex/translate.h"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "filtlex/bible.h"
#include "filtlex/errors.h"
#include "filtlex/io.h"
#include "filtlex/parallel.h"

namespace filtlex {

BackoffChain::BackoffChain(std::vector<ChainLink> links) : links_(std::move(links)) {
  if (links_.empty()) throw ConfigError("a back-off chain needs at least one lexicon");
  for (std::size_t i = 1; i < links_.size(); ++i) {
    if (links_[i].measured_precision > links_[i - 1].measured_precision)
      throw ConfigError("back-off chain is not ordered by precision at '" + links_[i].label + "'");
  }
}

BackoffChain order_chain(std::vector<LabeledLexicon> lexicons, const Bitext& dev, std::size_t workers) {
  if (lexicons.empty()) throw ConfigError("a back-off chain needs at least one lexicon");
  if (dev.empty()) throw ConfigError("cannot order a back-off chain on an empty dev set");
  std::vector<ChainLink> links;
  links.reserve(lexicons.size());
  for (auto& [label, lexicon] : lexicons) {
    const double precision = evaluate(lexicon, dev, BibleMode::precision, workers).cumulative_hit_rate.front();
    links.push_back({std::move(label), std::move(lexicon), precision});
  }
  std::stable_sort(links.begin(), links.end(), [](const ChainLink& x, const ChainLink& y) {
    if (x.measured_precision != y.measured_precision) return x.measured_precision > y.measured_precision;
    return x.label < y.label;
  });
  return BackoffChain(std::move(links));
}

std::optional<std::string> translate_word(std::string_view word, const BackoffChain& chain) {
  for (const auto& link : chain.links()) {
    if (auto best = link.lexicon.best(word)) return best;
  }
  return std::nullopt;
}

TokenScore score_tokens(const BackoffChain& chain, const Bitext& test, std::size_t workers) {
  if (test.empty()) throw ConfigError("cannot score translations of an empty test set");
  auto parts = map_ranges(test.size(), workers, [&](std::size_t begin, std::size_t end) {
    TokenScore score;
    std::unordered_map<std::string_view, std::size_t> available;
    for (std::size_t p = begin; p < end; ++p) {
      const auto& pair = test.pairs()[p];
      available.clear();
      for (const auto& t : pair.target) ++available[t.surface];
      for (const auto& s : pair.source) {
        ++score.tokens;
        const auto translation = translate_word(s.surface, chain);
        if (!translation) continue;
        ++score.translated;
        auto it = available.find(*translation);
        if (it != available.end() && it->second > 0) {
          --it->second;
          ++score.correct;
        }
      }
    }
    return score;
  });
  TokenScore total;
  for (const auto& part : parts) {
    total.tokens += part.tokens;
    total.translated += part.translated;
    total.correct += part.correct;
  }
  return total;
}

double score_corpus(const BackoffChain& chain, const Bitext& test, std::size_t workers) {
  return score_tokens(chain, test, workers).percent_correct();
}

void write_translations(std::ostream& out, const BackoffChain& chain, const Bitext& text) {
  for (const auto& pair : text.pairs()) {
    for (const auto& s : pair.source) out << s.surface << '\t' << translate_word(s.surface, chain).value_or("") << '\n';
    out << '\n';
  }
}

std::vector<std::pair<std::string, std::filesystem::path>> load_chain_spec(const std::filesystem::path& path) {
  auto in = open_input(path);
  const auto base = path.parent_path();
  std::vector<std::pair<std::string, std::filesystem::path>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() || line.find('\t', tab + 1) != std::string::npos)
      throw FormatError("chain spec line " + std::to_string(line_no) + ": expected label<TAB>lexicon-path");
    std::filesystem::path lexicon_path = line.substr(tab + 1);
    if (lexicon_path.is_relative()) lexicon_path = base / lexicon_path;
    out.emplace_back(line.substr(0, tab), lexicon_path);
  }
  if (out.empty()) throw ConfigError("chain spec '" + path.string() + "' lists no lexicons");
  return out;
}

}  // namespace filtlex
