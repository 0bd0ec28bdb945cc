#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

std::size_t brute_lcs(const std::string& a, const std::string& b) {
  std::size_t best = 0;
  const std::size_t subsets = std::size_t{1} << a.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::string sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(a[i]);
    }
    if (sub.size() <= best) continue;
    std::size_t j = 0;
    for (std::size_t i = 0; i < b.size() && j < sub.size(); ++i) {
      if (b[i] == sub[j]) ++j;
    }
    if (j == sub.size()) best = sub.size();
  }
  return best;
}

double direct_g2(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  using real = long double;
  const real n = static_cast<real>(a + b + c + d);
  const real obs[2][2] = {{static_cast<real>(a), static_cast<real>(b)}, {static_cast<real>(c), static_cast<real>(d)}};
  const real row[2] = {obs[0][0] + obs[0][1], obs[1][0] + obs[1][1]};
  const real col[2] = {obs[0][0] + obs[1][0], obs[0][1] + obs[1][1]};
  real sum = 0.0L;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (obs[i][j] == 0.0L) continue;
      const real expected = row[i] * col[j] / n;
      sum += obs[i][j] * std::log(obs[i][j] / expected);
    }
  }
  return static_cast<double>(2.0L * sum);
}

Fraction Fraction::operator+(const Fraction& o) const {
  const std::int64_t n = num * o.den + o.num * den;
  const std::int64_t d = den * o.den;
  const std::int64_t g = std::gcd(n, d);
  return g == 0 ? Fraction{0, 1} : Fraction{n / g, d / g};
}

Fraction Fraction::operator/(std::int64_t k) const {
  const std::int64_t d = den * k;
  const std::int64_t g = std::gcd(num, d);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, d / g};
}

BibleResult brute_bible(const std::map<std::string, std::vector<std::string>>& lexicon, std::size_t n,
                        const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& test,
                        bool percent_correct) {
  BibleResult r;
  std::vector<std::string> vocabulary;
  for (const auto& [src, tgt] : test) {
    std::vector<std::string> target = tgt;
    for (const auto& s : src) {
      vocabulary.push_back(s);
      const auto entry = lexicon.find(s);
      const bool in_lexicon = entry != lexicon.end();
      if (percent_correct) r.frq[s] += 1;  // lines 3 and 4 swapped
      if (!in_lexicon) continue;
      if (!percent_correct) r.frq[s] += 1;
      auto& hits = r.hit_count[s];
      hits.resize(n, 0);
      std::size_t k = 0;
      bool found = false;
      while (!found && k != n) {
        k += 1;
        if (k > entry->second.size()) continue;
        const std::string& t = entry->second[k - 1];
        auto it = std::find(target.begin(), target.end(), t);
        if (it != target.end()) {
          target.erase(it);
          hits[k - 1] += 1;
          found = true;
        }
      }
    }
  }
  std::sort(vocabulary.begin(), vocabulary.end());
  vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()), vocabulary.end());

  std::vector<Fraction> hit_rate(n + 1);
  for (const auto& s : vocabulary) {
    const auto f = r.frq.find(s);
    if (f == r.frq.end() || f->second == 0) continue;
    ++r.averaged_types;
    const auto h = r.hit_count.find(s);
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t count = h == r.hit_count.end() ? 0 : h->second[k - 1];
      hit_rate[k] = hit_rate[k] + Fraction{static_cast<std::int64_t>(count), static_cast<std::int64_t>(f->second)};
    }
  }
  std::vector<Fraction> cumulative(n + 1);
  for (std::size_t k = 1; k <= n; ++k) cumulative[k] = cumulative[k - 1] + hit_rate[k];
  for (std::size_t k = 1; k <= n; ++k) {
    r.cumulative.push_back(r.averaged_types == 0 ? Fraction{0, 1}
                                                 : cumulative[k] / static_cast<std::int64_t>(r.averaged_types));
  }
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> brute_select_loci(
    const std::vector<std::pair<std::size_t, std::size_t>>& matches) {
  std::vector<std::pair<std::size_t, std::size_t>> best;
  bool have_best = false;
  const std::size_t subsets = std::size_t{1} << matches.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t i = 0; i < matches.size(); ++i) {
      if (mask & (std::size_t{1} << i)) chosen.push_back(matches[i]);
    }
    std::sort(chosen.begin(), chosen.end());
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
        const auto& x = chosen[i];
        const auto& y = chosen[j];
        // distinct on both sides and same order on both sides
        const bool shares = x.first == y.first || x.second == y.second;
        const bool crosses = (x.first < y.first) != (x.second < y.second);
        if (shares || crosses) ok = false;
      }
    }
    if (!ok) continue;
    if (!have_best || chosen.size() > best.size() || (chosen.size() == best.size() && chosen < best)) {
      best = chosen;
      have_best = true;
    }
  }
  return best;
}

std::string random_string(std::mt19937_64& rng, const std::string& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(len(rng), ' ');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

filtlex::SentencePair random_pair(std::mt19937_64& rng, filtlex::PairId id, std::size_t max_len,
                                  const std::vector<std::string>& source_words,
                                  const std::vector<std::string>& target_words, bool tagged) {
  static const std::vector<std::string> kTags = {"N", "NP", "V", "J", "VBG", "VBN", "D", "IN", "EOS"};
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> src_pick(0, source_words.size() - 1);
  std::uniform_int_distribution<std::size_t> tgt_pick(0, target_words.size() - 1);
  std::uniform_int_distribution<std::size_t> tag_pick(0, kTags.size() - 1);
  filtlex::SentencePair pair;
  pair.id = id;
  const std::size_t ls = len(rng), lt = len(rng);
  for (std::size_t i = 0; i < ls; ++i) {
    filtlex::Token t{source_words[src_pick(rng)], std::nullopt, i};
    if (tagged) t.tag = kTags[tag_pick(rng)];
    pair.source.push_back(t);
  }
  for (std::size_t i = 0; i < lt; ++i) {
    filtlex::Token t{target_words[tgt_pick(rng)], std::nullopt, i};
    if (tagged) t.tag = kTags[tag_pick(rng)];
    pair.target.push_back(t);
  }
  return pair;
}

}  // namespace oracle
