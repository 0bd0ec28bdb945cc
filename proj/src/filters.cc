#include "filtlex/filters.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "filtlex/errors.h"
#include "filtlex/io.h"

namespace filtlex {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

const std::string& coarse_tag_of(const Token& token, const TagMatchTable& table, std::string& scratch) {
  if (!token.tag) throw TaggingError("token '" + token.surface + "' has no tag");
  auto coarse = table.coarse(*token.tag);
  if (!coarse) throw TaggingError("tag '" + *token.tag + "' is not in the tag table");
  scratch = std::move(*coarse);
  return scratch;
}

void append(std::vector<Locus>& out, const std::vector<Locus>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

TagMatchTable TagMatchTable::common_tag_set() {
  TagMatchTable t;
  t.add_matches("CD", {"CD"});
  t.add_matches("CJ", {"CJ"});
  t.add_matches("D", {"D"});
  t.add_matches("EOP", {"EOP"});
  t.add_matches("EOS", {"EOS"});
  t.add_matches("IN", {"IN"});
  t.add_matches("J", {"J", "VBG", "VBN"});
  t.add_matches("N", {"N", "NP"});
  t.add_matches("NP", {"NP", "N"});
  t.add_matches("P", {"P"});
  t.add_matches("R", {"R"});
  t.add_matches("SCM", {"SCM"});
  t.add_matches("UH", {"UH"});
  t.add_matches("V", {"V"});
  t.add_matches("VBG", {"VBG", "J", "VBN"});
  t.add_matches("VBN", {"VBN", "J", "VBG"});
  return t;
}

void TagMatchTable::add_matches(const std::string& coarse, const std::vector<std::string>& matches) {
  auto& set = match_sets_[coarse];
  set.insert(coarse);
  set.insert(matches.begin(), matches.end());
}

void TagMatchTable::add_remap(const std::string& fine, const std::string& coarse) { remap_[fine] = coarse; }

void TagMatchTable::validate() const {
  for (const auto& [coarse, set] : match_sets_) {
    for (const auto& m : set) {
      if (!match_sets_.count(m))
        throw ConfigError("tag table: '" + coarse + "' matches undeclared tag '" + m + "'");
    }
  }
  for (const auto& [fine, coarse] : remap_) {
    if (!match_sets_.count(coarse))
      throw ConfigError("tag table: '" + fine + "' remaps to undeclared tag '" + coarse + "'");
  }
}

std::optional<std::string> TagMatchTable::coarse(std::string_view tag) const {
  if (auto it = remap_.find(tag); it != remap_.end()) return it->second;
  if (match_sets_.count(tag)) return std::string(tag);
  return std::nullopt;
}

bool TagMatchTable::matches(std::string_view source_coarse, std::string_view target_coarse) const {
  auto it = match_sets_.find(source_coarse);
  return it != match_sets_.end() && it->second.count(target_coarse) > 0;
}

TagMatchTable read_tag_table(std::istream& in) {
  TagMatchTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    if (auto arrow = body.find("->"); arrow != std::string::npos) {
      const auto fine = trim(std::string_view(body).substr(0, arrow));
      const auto coarse = trim(std::string_view(body).substr(arrow + 2));
      if (fine.empty() || coarse.empty())
        throw FormatError("tag table line " + std::to_string(line_no) + ": expected FINE -> COARSE");
      table.add_remap(fine, coarse);
    } else if (auto colon = body.find(':'); colon != std::string::npos) {
      const auto coarse = trim(std::string_view(body).substr(0, colon));
      if (coarse.empty()) throw FormatError("tag table line " + std::to_string(line_no) + ": empty tag");
      std::vector<std::string> matches;
      std::string_view rest = std::string_view(body).substr(colon + 1);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        auto item = trim(rest.substr(0, comma));
        if (!item.empty()) matches.push_back(std::move(item));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      table.add_matches(coarse, matches);
    } else {
      throw FormatError("tag table line " + std::to_string(line_no) + ": expected `FINE -> COARSE` or `COARSE: A,B`");
    }
  }
  table.validate();
  return table;
}

TagMatchTable load_tag_table(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_tag_table(in);
}

void write_tag_table(std::ostream& out, const TagMatchTable& table) {
  for (const auto& [coarse, set] : table.match_sets()) {
    out << coarse << ':';
    bool first = true;
    for (const auto& m : set) {
      out << (first ? " " : ",") << m;
      first = false;
    }
    out << '\n';
  }
  for (const auto& [fine, coarse] : table.remaps()) out << fine << " -> " << coarse << '\n';
}

std::string_view filter_name(FilterKind kind) {
  switch (kind) {
    case FilterKind::pos: return "pos";
    case FilterKind::mrbd: return "mrbd";
    case FilterKind::cognate: return "cognate";
    case FilterKind::align: return "align";
  }
  return "?";
}

std::vector<FilterKind> parse_cascade(std::string_view spec) {
  std::vector<FilterKind> filters;
  if (trim(spec).empty()) return filters;
  while (true) {
    const auto comma = spec.find(',');
    const auto name = trim(spec.substr(0, comma));
    FilterKind kind;
    if (name == "pos")
      kind = FilterKind::pos;
    else if (name == "mrbd")
      kind = FilterKind::mrbd;
    else if (name == "cognate")
      kind = FilterKind::cognate;
    else if (name == "align")
      kind = FilterKind::align;
    else
      throw ConfigError("unknown filter '" + name + "' (expected pos, mrbd, cognate or align)");
    if (std::find(filters.begin(), filters.end(), kind) != filters.end())
      throw ConfigError("filter '" + name + "' listed twice");
    filters.push_back(kind);
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return filters;
}

std::string cascade_string(const std::vector<FilterKind>& filters) {
  std::string out;
  for (auto f : filters) {
    if (!out.empty()) out += ',';
    out += filter_name(f);
  }
  return out;
}

void CascadeConfig::validate() const {
  for (std::size_t i = 0; i < filters.size(); ++i) {
    if (std::find(filters.begin() + i + 1, filters.end(), filters[i]) != filters.end())
      throw ConfigError("filter '" + std::string(filter_name(filters[i])) + "' listed twice");
  }
  for (auto f : filters) {
    switch (f) {
      case FilterKind::pos:
        if (!tags) throw ConfigError("filter 'pos' needs a tag map");
        tags->validate();
        break;
      case FilterKind::mrbd:
        if (!oracle) throw ConfigError("filter 'mrbd' needs an oracle list");
        break;
      case FilterKind::cognate:
      case FilterKind::align:
        lcsr.validate();
        break;
    }
  }
}

Candidates generate_candidates(const SentencePair& pair) {
  Candidates out;
  out.reserve(pair.source.size() * pair.target.size());
  for (const auto& s : pair.source) {
    for (const auto& t : pair.target) out.push_back({s.surface, t.surface, s.position, t.position, pair.id});
  }
  return out;
}

Candidates pos_filter(const Candidates& cands, const SentencePair& pair, const TagMatchTable& table) {
  std::vector<std::string> src_tags(pair.source.size()), tgt_tags(pair.target.size());
  std::string scratch;
  for (const auto& tok : pair.source) src_tags[tok.position] = coarse_tag_of(tok, table, scratch);
  for (const auto& tok : pair.target) tgt_tags[tok.position] = coarse_tag_of(tok, table, scratch);
  Candidates out;
  out.reserve(cands.size());
  for (const auto& c : cands) {
    if (c.source_pos >= src_tags.size() || c.target_pos >= tgt_tags.size())
      throw ContractError("candidate position outside its sentence pair");
    if (table.matches(src_tags[c.source_pos], tgt_tags[c.target_pos])) out.push_back(c);
  }
  return out;
}

std::vector<Locus> oracle_matches(const SentencePair& pair, const OracleList& oracle) {
  std::vector<Locus> out;
  if (oracle.empty()) return out;
  for (const auto& s : pair.source) {
    const auto& partners = oracle.targets_of(s.surface);
    if (partners.empty()) continue;
    for (const auto& t : pair.target) {
      if (partners.count(t.surface)) out.push_back({s.position, t.position, LocusKind::dictionary});
    }
  }
  return out;
}

std::vector<Locus> cognate_matches(const SentencePair& pair, const LcsrParams& params) {
  std::vector<Locus> out;
  for (const auto& s : pair.source) {
    for (const auto& t : pair.target) {
      if (is_cognate(s, t, params)) out.push_back({s.position, t.position, LocusKind::cognate});
    }
  }
  return out;
}

Candidates oracle_filter(const Candidates& cands, const std::vector<Locus>& matches) {
  if (matches.empty()) return cands;
  std::map<std::size_t, std::set<std::size_t>> src_partners, tgt_partners;
  for (const auto& m : matches) {
    src_partners[m.source_pos].insert(m.target_pos);
    tgt_partners[m.target_pos].insert(m.source_pos);
  }
  Candidates out;
  out.reserve(cands.size());
  for (const auto& c : cands) {
    if (auto it = src_partners.find(c.source_pos); it != src_partners.end() && !it->second.count(c.target_pos))
      continue;
    if (auto it = tgt_partners.find(c.target_pos); it != tgt_partners.end() && !it->second.count(c.source_pos))
      continue;
    out.push_back(c);
  }
  return out;
}

std::vector<Locus> select_loci(const std::vector<Locus>& matches) {
  // one entry per position pair, sorted by (source, target)
  std::vector<Locus> points = matches;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Locus& x, const Locus& y) {
                             return x.source_pos == y.source_pos && x.target_pos == y.target_pos;
                           }),
               points.end());
  const std::size_t m = points.size();
  if (m == 0) return {};

  // longest strictly increasing chain starting at each point
  std::vector<std::size_t> chain(m, 1);
  std::size_t best = 0;
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (points[j].source_pos > points[i].source_pos && points[j].target_pos > points[i].target_pos)
        chain[i] = std::max(chain[i], chain[j] + 1);
    }
    best = std::max(best, chain[i]);
  }

  // greedy: the smallest point that can still finish a maximum chain
  std::vector<Locus> out;
  out.reserve(best);
  std::size_t start = 0;
  for (std::size_t need = best; need > 0; --need) {
    for (std::size_t i = start; i < m; ++i) {
      const bool after_prev = out.empty() || (points[i].source_pos > out.back().source_pos &&
                                              points[i].target_pos > out.back().target_pos);
      if (after_prev && chain[i] >= need) {
        out.push_back(points[i]);
        start = i + 1;
        break;
      }
    }
  }
  return out;
}

Candidates alignment_filter(const Candidates& cands, const std::vector<Locus>& loci) {
  for (std::size_t k = 1; k < loci.size(); ++k) {
    if (loci[k].source_pos <= loci[k - 1].source_pos || loci[k].target_pos <= loci[k - 1].target_pos)
      throw ContractError("alignment loci must be sorted and pairwise non-crossing");
  }
  if (loci.empty()) return cands;
  Candidates out;
  out.reserve(cands.size());
  for (const auto& c : cands) {
    const bool ok = std::all_of(loci.begin(), loci.end(), [&](const Locus& l) {
      return (c.source_pos < l.source_pos && c.target_pos < l.target_pos) ||
             (c.source_pos > l.source_pos && c.target_pos > l.target_pos) ||
             (c.source_pos == l.source_pos && c.target_pos == l.target_pos);
    });
    if (ok) out.push_back(c);
  }
  return out;
}

Candidates run_cascade(const SentencePair& pair, const CascadeConfig& config, Attrition* attrition) {
  Candidates cands = generate_candidates(pair);
  if (attrition) {
    attrition->assign(config.filters.size() + 1, 0);
    (*attrition)[0] = cands.size();
  }
  const auto configured = [&](FilterKind kind) {
    return std::find(config.filters.begin(), config.filters.end(), kind) != config.filters.end();
  };
  for (std::size_t step = 0; step < config.filters.size(); ++step) {
    switch (config.filters[step]) {
      case FilterKind::pos:
        if (!config.tags) throw ConfigError("filter 'pos' needs a tag map");
        cands = pos_filter(cands, pair, *config.tags);
        break;
      case FilterKind::mrbd:
        if (!config.oracle) throw ConfigError("filter 'mrbd' needs an oracle list");
        cands = oracle_filter(cands, oracle_matches(pair, *config.oracle));
        break;
      case FilterKind::cognate:
        cands = oracle_filter(cands, cognate_matches(pair, config.lcsr));
        break;
      case FilterKind::align: {
        // loci come from the oracle filters in the cascade, or from every
        // available resource when the cascade has none
        const bool use_mrbd = configured(FilterKind::mrbd);
        const bool use_cognate = configured(FilterKind::cognate);
        const bool neither = !use_mrbd && !use_cognate;
        std::vector<Locus> matches;
        if ((use_mrbd || neither) && config.oracle) append(matches, oracle_matches(pair, *config.oracle));
        if (use_cognate || neither) append(matches, cognate_matches(pair, config.lcsr));
        cands = alignment_filter(cands, select_loci(matches));
        break;
      }
    }
    if (attrition) (*attrition)[step + 1] = cands.size();
  }
  return cands;
}

}  // namespace filtlex
