#include "filtlex/corpus.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "filtlex/errors.h"
#include "filtlex/io.h"
#include "filtlex/utf8.h"

namespace filtlex {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) fields.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

Sentence parse_sentence(std::string_view line, std::size_t line_no, const char* side, const LoadOptions& options) {
  Sentence sentence;
  for (auto& field : split_fields(line)) {
    Token token;
    token.position = sentence.size();
    if (options.tagged) {
      const auto slash = field.rfind('/');
      if (slash == std::string::npos || slash == 0 || slash + 1 == field.size()) {
        throw TaggingError(std::string(side) + " line " + std::to_string(line_no) +
                           ": token '" + field + "' is not of the form surface/TAG");
      }
      token.tag = field.substr(slash + 1);
      field.resize(slash);
    }
    token.surface = options.lowercase ? utf8::lowercase(field) : std::move(field);
    sentence.push_back(std::move(token));
  }
  return sentence;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(std::move(line));
  return lines;
}

void check_sentence(const Sentence& sentence, PairId id, const char* side) {
  if (sentence.empty())
    throw MalformedPairError("pair " + std::to_string(id) + ": empty " + side + " sentence");
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    const auto& tok = sentence[i];
    if (tok.position != i)
      throw MalformedPairError("pair " + std::to_string(id) + ": " + side + " token positions are not consecutive");
    if (tok.surface.empty() || std::any_of(tok.surface.begin(), tok.surface.end(), is_space))
      throw MalformedPairError("pair " + std::to_string(id) + ": bad " + side + " token '" + tok.surface + "'");
  }
}

const std::set<std::string, std::less<>> kNoWords;

}  // namespace

Sentence make_sentence(const std::vector<std::string>& surfaces) {
  Sentence sentence;
  sentence.reserve(surfaces.size());
  for (const auto& s : surfaces) sentence.push_back(Token{s, std::nullopt, sentence.size()});
  return sentence;
}

void Vocabulary::add_sentence(const Sentence& sentence) {
  std::set<std::string_view> seen;
  for (const auto& tok : sentence) {
    if (!seen.insert(tok.surface).second) continue;
    auto it = freq_.find(tok.surface);
    if (it == freq_.end())
      freq_.emplace(tok.surface, 1);
    else
      ++it->second;
  }
}

std::size_t Vocabulary::doc_freq(std::string_view word) const {
  auto it = freq_.find(word);
  return it == freq_.end() ? 0 : it->second;
}

Bitext::Bitext(std::vector<SentencePair> pairs) : pairs_(std::move(pairs)) {
  index_.reserve(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& pair = pairs_[i];
    check_sentence(pair.source, pair.id, "source");
    check_sentence(pair.target, pair.id, "target");
    if (!index_.emplace(pair.id, i).second)
      throw MalformedPairError("duplicate pair id " + std::to_string(pair.id));
    source_vocab_.add_sentence(pair.source);
    target_vocab_.add_sentence(pair.target);
  }
}

const SentencePair* Bitext::find(PairId id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &pairs_[it->second];
}

bool Bitext::tagged() const {
  auto has_tags = [](const Sentence& s) {
    return std::all_of(s.begin(), s.end(), [](const Token& t) { return t.tag.has_value(); });
  };
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [&](const SentencePair& p) { return has_tags(p.source) && has_tags(p.target); });
}

Bitext read_bitext(std::istream& source, std::istream& target, const LoadOptions& options) {
  const auto src_lines = read_lines(source);
  const auto tgt_lines = read_lines(target);
  if (src_lines.size() != tgt_lines.size()) {
    throw AlignmentError("source has " + std::to_string(src_lines.size()) + " lines but target has " +
                         std::to_string(tgt_lines.size()));
  }
  std::vector<SentencePair> pairs;
  pairs.reserve(src_lines.size());
  for (std::size_t i = 0; i < src_lines.size(); ++i) {
    SentencePair pair;
    pair.id = i;
    pair.source = parse_sentence(src_lines[i], i + 1, "source", options);
    pair.target = parse_sentence(tgt_lines[i], i + 1, "target", options);
    if (pair.source.empty() || pair.target.empty()) {
      throw MalformedPairError("line " + std::to_string(i + 1) + ": empty " +
                               (pair.source.empty() ? "source" : "target") + " sentence");
    }
    pairs.push_back(std::move(pair));
  }
  return Bitext(std::move(pairs));
}

Bitext load_bitext(const std::filesystem::path& source_path,
                   const std::filesystem::path& target_path,
                   const LoadOptions& options) {
  auto src = open_input(source_path);
  auto tgt = open_input(target_path);
  return read_bitext(src, tgt, options);
}

void write_sentences(std::ostream& out, const Bitext& bitext, bool source_side) {
  for (const auto& pair : bitext.pairs()) {
    const auto& sentence = source_side ? pair.source : pair.target;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      if (i) out << ' ';
      out << sentence[i].surface;
      if (sentence[i].tag) out << '/' << *sentence[i].tag;
    }
    out << '\n';
  }
}

void save_bitext(const Bitext& bitext,
                 const std::filesystem::path& source_path,
                 const std::filesystem::path& target_path) {
  auto src = open_output(source_path);
  write_sentences(src, bitext, true);
  auto tgt = open_output(target_path);
  write_sentences(tgt, bitext, false);
}

Bitext restrict_bitext(const Bitext& bitext, std::size_t max_len) {
  if (max_len == 0) throw ConfigError("max_len must be at least 1");
  std::vector<SentencePair> kept;
  for (const auto& pair : bitext.pairs()) {
    if (pair.source.size() <= max_len && pair.target.size() <= max_len) kept.push_back(pair);
  }
  return Bitext(std::move(kept));
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  // Fisher-Yates with rejection sampling on the raw engine output
  for (std::size_t i = n; i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    std::swap(order[i - 1], order[r % bound]);
  }
  return order;
}

BitextSplit split_bitext(const Bitext& bitext, std::size_t test_count, std::uint64_t seed) {
  if (test_count > bitext.size()) {
    throw ConfigError("test_count " + std::to_string(test_count) + " exceeds corpus size " +
                      std::to_string(bitext.size()));
  }
  const auto order = seeded_permutation(bitext.size(), seed);
  std::vector<bool> in_test(bitext.size(), false);
  for (std::size_t i = 0; i < test_count; ++i) in_test[order[i]] = true;
  std::vector<SentencePair> train, test;
  for (std::size_t i = 0; i < bitext.size(); ++i) (in_test[i] ? test : train).push_back(bitext.pairs()[i]);
  return {Bitext(std::move(train)), Bitext(std::move(test))};
}

std::vector<Bitext> partition_bitext(const Bitext& bitext, std::size_t parts, std::uint64_t seed) {
  if (parts == 0) throw ConfigError("cannot partition into zero parts");
  if (parts > bitext.size()) {
    throw ConfigError("cannot partition " + std::to_string(bitext.size()) + " pairs into " +
                      std::to_string(parts) + " non-empty parts");
  }
  const auto order = seeded_permutation(bitext.size(), seed);
  std::vector<std::size_t> part_of(bitext.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) part_of[order[rank]] = rank % parts;
  std::vector<std::vector<SentencePair>> slices(parts);
  for (std::size_t i = 0; i < bitext.size(); ++i) slices[part_of[i]].push_back(bitext.pairs()[i]);
  std::vector<Bitext> out;
  out.reserve(parts);
  for (auto& slice : slices) out.emplace_back(std::move(slice));
  return out;
}

OracleList::OracleList(const std::vector<std::pair<std::string, std::string>>& pairs) {
  for (const auto& [s, t] : pairs) insert(s, t);
}

void OracleList::insert(std::string source, std::string target) {
  if (!pairs_.emplace(source, target).second) return;
  by_source_[source].insert(target);
  by_target_[std::move(target)].insert(std::move(source));
}

bool OracleList::contains(std::string_view source, std::string_view target) const {
  auto it = by_source_.find(source);
  return it != by_source_.end() && it->second.count(target) > 0;
}

const std::set<std::string, std::less<>>& OracleList::targets_of(std::string_view source) const {
  auto it = by_source_.find(source);
  return it == by_source_.end() ? kNoWords : it->second;
}

const std::set<std::string, std::less<>>& OracleList::sources_of(std::string_view target) const {
  auto it = by_target_.find(target);
  return it == by_target_.end() ? kNoWords : it->second;
}

OracleList read_oracle_list(std::istream& in, bool lowercase) {
  OracleList oracle;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError("oracle line " + std::to_string(line_no) + ": expected exactly 2 tab-separated fields");
    }
    std::string source = line.substr(0, tab);
    std::string target = line.substr(tab + 1);
    if (source.empty() || target.empty())
      throw FormatError("oracle line " + std::to_string(line_no) + ": empty field");
    if (lowercase) {
      source = utf8::lowercase(source);
      target = utf8::lowercase(target);
    }
    oracle.insert(std::move(source), std::move(target));
  }
  return oracle;
}

OracleList load_oracle_list(const std::filesystem::path& path, bool lowercase) {
  auto in = open_input(path);
  return read_oracle_list(in, lowercase);
}

}  // namespace filtlex
