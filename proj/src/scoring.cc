#include "filtlex/scoring.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include "filtlex/errors.h"
#include "filtlex/io.h"

namespace filtlex {

namespace {

using i128 = __int128;

// O * ln(O * N / (R * C)), with the ratio's numerator formed exactly so
// that near-independent tables keep their precision.
long double cell_term(std::uint64_t observed, std::uint64_t row, std::uint64_t col, std::uint64_t total) {
  if (observed == 0) return 0.0L;
  const i128 expected_scaled = static_cast<i128>(row) * static_cast<i128>(col);
  const i128 diff = static_cast<i128>(observed) * static_cast<i128>(total) - expected_scaled;
  const long double x = static_cast<long double>(diff) / static_cast<long double>(expected_scaled);
  return static_cast<long double>(observed) * std::log1pl(x);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

template <typename T>
bool parse_number(const std::string& text, T& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

double g2(const ContingencyTable& t) {
  const std::uint64_t n = t.total();
  if (n == 0) throw ContractError("G2 is undefined for an all-zero contingency table");
  const std::uint64_t r1 = t.a + t.b, r2 = t.c + t.d;
  const std::uint64_t c1 = t.a + t.c, c2 = t.b + t.d;
  if (r1 == 0 || r2 == 0 || c1 == 0 || c2 == 0) return 0.0;
  if (static_cast<unsigned __int128>(t.a) * t.d == static_cast<unsigned __int128>(t.b) * t.c) return 0.0;

  std::array<long double, 4> terms = {cell_term(t.a, r1, c1, n), cell_term(t.b, r1, c2, n),
                                      cell_term(t.c, r2, c1, n), cell_term(t.d, r2, c2, n)};
  // fixed summation order keeps the value invariant under relabeling
  std::sort(terms.begin(), terms.end());
  long double sum = 0.0L;
  for (auto v : terms) sum += v;
  const double out = static_cast<double>(2.0L * sum);
  return out > 0.0 ? out : 0.0;
}

double signed_g2(const ContingencyTable& t) {
  const double value = g2(t);
  return static_cast<unsigned __int128>(t.a) * t.d < static_cast<unsigned __int128>(t.b) * t.c ? -value : value;
}

std::size_t WordPairHash::operator()(const WordPair& p) const noexcept {
  const std::size_t h1 = std::hash<std::string>{}(p.first);
  const std::size_t h2 = std::hash<std::string>{}(p.second);
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

void CooccurrenceCounter::add(const Candidates& cands) {
  std::vector<std::tuple<PairId, const std::string*, const std::string*>> keys;
  keys.reserve(cands.size());
  for (const auto& c : cands) keys.emplace_back(c.pair_id, &c.source_word, &c.target_word);
  std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    if (int cmp = std::get<1>(x)->compare(*std::get<1>(y)); cmp != 0) return cmp < 0;
    return *std::get<2>(x) < *std::get<2>(y);
  });
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i > 0 && std::get<0>(keys[i]) == std::get<0>(keys[i - 1]) &&
        *std::get<1>(keys[i]) == *std::get<1>(keys[i - 1]) && *std::get<2>(keys[i]) == *std::get<2>(keys[i - 1]))
      continue;
    ++joint_[WordPair(*std::get<1>(keys[i]), *std::get<2>(keys[i]))];
  }
}

void CooccurrenceCounter::merge(const CooccurrenceCounter& other) {
  for (const auto& [key, count] : other.joint_) joint_[key] += count;
}

std::size_t CooccurrenceCounter::joint(const std::string& source, const std::string& target) const {
  auto it = joint_.find(WordPair(source, target));
  return it == joint_.end() ? 0 : it->second;
}

std::map<WordPair, ContingencyTable> CooccurrenceCounter::tables(const Bitext& corpus) const {
  std::map<WordPair, ContingencyTable> out;
  const std::uint64_t total = corpus.size();
  for (const auto& [key, joint] : joint_) {
    const std::uint64_t with_s = corpus.source_vocab().doc_freq(key.first);
    const std::uint64_t with_t = corpus.target_vocab().doc_freq(key.second);
    if (joint > with_s || joint > with_t)
      throw ContractError("co-occurrence of (" + key.first + ", " + key.second + ") exceeds its corpus margins");
    ContingencyTable t;
    t.a = joint;
    t.b = with_s - joint;
    t.c = with_t - joint;
    // each filtered co-presence lands in both b and c; d cannot go below 0
    t.d = total + joint >= with_s + with_t ? total + joint - with_s - with_t : 0;
    out.emplace(key, t);
  }
  return out;
}

std::map<WordPair, ContingencyTable> count_cooccurrences(const Candidates& cands, const Bitext& corpus) {
  for (const auto& c : cands) {
    if (!corpus.find(c.pair_id))
      throw ContractError("candidate (" + c.source_word + ", " + c.target_word + ") comes from unknown pair " +
                          std::to_string(c.pair_id));
  }
  CooccurrenceCounter counter;
  counter.add(cands);
  return counter.tables(corpus);
}

NBestLexicon::NBestLexicon(std::size_t n_max) : n_max_(n_max) {
  if (n_max == 0) throw ConfigError("an N-best lexicon needs N >= 1");
}

void NBestLexicon::set_entries(const std::string& source, std::vector<LexiconEntry> entries) {
  if (entries.size() > n_max_)
    throw ContractError("entry for '" + source + "' has more than " + std::to_string(n_max_) + " translations");
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!seen.insert(entries[i].target).second)
      throw ContractError("entry for '" + source + "' repeats '" + entries[i].target + "'");
    if (i > 0 && entries[i].score > entries[i - 1].score)
      throw ContractError("entry for '" + source + "' is not sorted by score");
  }
  if (entries.empty())
    entries_.erase(source);
  else
    entries_[source] = std::move(entries);
}

const std::vector<LexiconEntry>* NBestLexicon::find(std::string_view source) const {
  auto it = entries_.find(source);
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::string> NBestLexicon::best(std::string_view source) const {
  const auto* list = find(source);
  if (!list || list->empty()) return std::nullopt;
  return list->front().target;
}

NBestLexicon build_lexicon(const std::map<WordPair, ContingencyTable>& counts, std::size_t n,
                           std::uint64_t min_cooccurrence) {
  NBestLexicon lexicon(n);
  auto it = counts.begin();
  while (it != counts.end()) {
    const std::string& source = it->first.first;
    std::vector<LexiconEntry> ranked;
    for (; it != counts.end() && it->first.first == source; ++it) {
      if (it->second.a < min_cooccurrence || it->second.a == 0) continue;
      ranked.push_back({it->first.second, signed_g2(it->second), it->second.a});
    }
    std::sort(ranked.begin(), ranked.end(), [](const LexiconEntry& x, const LexiconEntry& y) {
      if (x.score != y.score) return x.score > y.score;
      if (x.cooccurrence != y.cooccurrence) return x.cooccurrence > y.cooccurrence;
      return x.target < y.target;
    });
    if (ranked.size() > n) ranked.resize(n);
    if (!ranked.empty()) lexicon.set_entries(source, std::move(ranked));
  }
  return lexicon;
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  std::string out(buf);
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') out.erase(0, 1);
  return out;
}

void write_lexicon(std::ostream& out, const NBestLexicon& lexicon,
                   const std::vector<std::pair<std::string, std::string>>& header) {
  out << "# n=" << lexicon.n_max() << '\n';
  for (const auto& [key, value] : header) {
    if (key != "n") out << "# " << key << '=' << value << '\n';
  }
  for (const auto& [source, list] : lexicon.entries()) {
    for (std::size_t r = 0; r < list.size(); ++r) {
      out << source << '\t' << (r + 1) << '\t' << list[r].target << '\t' << format_fixed(list[r].score) << '\t'
          << list[r].cooccurrence << '\n';
    }
  }
}

NBestLexicon read_lexicon(std::istream& in) {
  struct Row {
    std::string source;
    std::size_t rank;
    LexiconEntry entry;
    std::size_t line_no;
  };
  std::vector<Row> rows;
  std::optional<std::size_t> declared_n;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      if (line.rfind("# n=", 0) == 0) {
        std::size_t n = 0;
        if (!parse_number(line.substr(4), n) || n == 0)
          throw FormatError("lexicon line " + std::to_string(line_no) + ": bad N in header");
        declared_n = n;
      }
      continue;
    }
    const auto fields = split_tabs(line);
    Row row;
    row.line_no = line_no;
    if (fields.size() != 5 || fields[0].empty() || fields[2].empty() || !parse_number(fields[1], row.rank) ||
        !parse_number(fields[3], row.entry.score) || !parse_number(fields[4], row.entry.cooccurrence)) {
      throw FormatError("lexicon line " + std::to_string(line_no) +
                        ": expected source<TAB>rank<TAB>target<TAB>score<TAB>cooccurrence");
    }
    row.source = fields[0];
    row.entry.target = fields[2];
    rows.push_back(std::move(row));
  }

  std::size_t n = declared_n.value_or(0);
  if (!declared_n) {
    for (const auto& r : rows) n = std::max(n, r.rank);
    n = std::max<std::size_t>(n, 1);
  }
  NBestLexicon lexicon(n);
  std::set<std::string> done;
  std::size_t i = 0;
  while (i < rows.size()) {
    const std::string source = rows[i].source;
    if (done.count(source))
      throw FormatError("lexicon line " + std::to_string(rows[i].line_no) + ": entries for '" + source +
                        "' are not contiguous");
    std::vector<LexiconEntry> list;
    for (; i < rows.size() && rows[i].source == source; ++i) {
      if (rows[i].rank != list.size() + 1)
        throw FormatError("lexicon line " + std::to_string(rows[i].line_no) + ": expected rank " +
                          std::to_string(list.size() + 1));
      list.push_back(rows[i].entry);
    }
    try {
      lexicon.set_entries(source, std::move(list));
    } catch (const ContractError& e) {
      throw FormatError(std::string("lexicon: ") + e.what());
    }
    done.insert(source);
  }
  return lexicon;
}

NBestLexicon load_lexicon(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_lexicon(in);
}

}  // namespace filtlex
