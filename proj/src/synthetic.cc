#include "filtlex/synthetic.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "filtlex/cognate.h"
#include "filtlex/errors.h"

namespace filtlex {

namespace {

// std:: distributions differ between standard libraries; these do not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return static_cast<std::size_t>(r % b);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
constexpr std::string_view kTags[] = {"N", "V", "J", "D", "IN", "R", "P", "CJ"};

std::string random_word(Rng& rng, std::size_t min_len, std::size_t max_len) {
  const std::size_t len = min_len + rng.below(max_len - min_len + 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(kLetters[rng.below(kLetters.size())]);
  return w;
}

std::string mutate(Rng& rng, const std::string& word) {
  std::string out = word;
  switch (rng.below(3)) {
    case 0: {
      const std::size_t i = rng.below(out.size());
      char c;
      do {
        c = kLetters[rng.below(kLetters.size())];
      } while (c == out[i]);
      out[i] = c;
      break;
    }
    case 1:
      out.insert(out.begin() + rng.below(out.size() + 1), kLetters[rng.below(kLetters.size())]);
      break;
    default:
      if (out.size() > 4) out.erase(out.begin() + rng.below(out.size()));
      else out.push_back(kLetters[rng.below(kLetters.size())]);
      break;
  }
  return out;
}

Token make_token(std::string surface, std::size_t position, const std::string* tag) {
  Token t;
  t.surface = std::move(surface);
  t.position = position;
  if (tag) t.tag = *tag;
  return t;
}

}  // namespace

SyntheticCorpus make_synthetic(const SyntheticConfig& config) {
  if (config.vocabulary < 2) throw ConfigError("synthetic vocabulary must have at least 2 types");
  if (config.min_len == 0 || config.max_len < config.min_len) throw ConfigError("bad synthetic sentence lengths");
  Rng rng(config.seed);
  const LcsrParams lcsr_params;

  const std::size_t v = config.vocabulary;
  std::vector<std::string> source(v), target(v), tags(v);
  std::set<std::string> used_source, used_target;
  for (std::size_t i = 0; i < v; ++i) {
    std::string w;
    do {
      w = random_word(rng, 4, 9);
    } while (!used_source.insert(w).second);
    source[i] = w;
    tags[i] = kTags[rng.below(std::size(kTags))];
  }

  // types are drawn for each role from a permutation, so the shares are exact
  const auto pick = [&](double fraction) {
    std::vector<std::size_t> order(v);
    for (std::size_t i = 0; i < v; ++i) order[i] = i;
    for (std::size_t i = v; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<bool> chosen(v, false);
    const auto count = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(v)));
    for (std::size_t i = 0; i < std::min(count, v); ++i) chosen[order[i]] = true;
    return chosen;
  };
  const auto cognate = pick(config.cognate_fraction);
  const auto in_oracle = pick(config.oracle_fraction);

  SyntheticCorpus out;
  for (std::size_t i = 0; i < v; ++i) {
    std::string t;
    if (cognate[i]) {
      do {
        t = mutate(rng, source[i]);
      } while (used_target.count(t) || !is_cognate(source[i], t, lcsr_params));
      ++out.cognate_types;
    } else {
      do {
        t = random_word(rng, 4, 9);
      } while (used_target.count(t) || lcsr(source[i], t) >= lcsr_params.cutoff);
    }
    used_target.insert(t);
    target[i] = t;
    out.truth.emplace(source[i], t);
    if (in_oracle[i]) out.oracle.insert(source[i], t);
  }
  out.truth.emplace(".", ".");

  std::vector<double> cdf(v);
  double acc = 0.0;
  for (std::size_t r = 0; r < v; ++r) {
    acc += 1.0 / std::pow(static_cast<double>(r + 1), config.zipf);
    cdf[r] = acc;
  }
  const auto draw = [&] {
    const double u = rng.unit() * acc;
    return static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()) % v;
  };

  const std::string eos_tag = "EOS";
  std::vector<SentencePair> pairs;
  pairs.reserve(config.pairs);
  for (std::size_t p = 0; p < config.pairs; ++p) {
    const std::size_t len = config.min_len + rng.below(config.max_len - config.min_len + 1);
    std::vector<std::size_t> src_types(len), tgt_types(len);
    for (std::size_t i = 0; i < len; ++i) {
      src_types[i] = draw();
      tgt_types[i] = rng.unit() < config.noise ? rng.below(v) : src_types[i];
    }
    for (std::size_t i = 0; i + 1 < len; ++i) {
      if (rng.unit() < config.swap) {
        std::swap(tgt_types[i], tgt_types[i + 1]);
        ++i;
      }
    }
    SentencePair pair;
    pair.id = p;
    for (std::size_t i = 0; i < len; ++i) {
      pair.source.push_back(make_token(source[src_types[i]], i, config.tagged ? &tags[src_types[i]] : nullptr));
      pair.target.push_back(make_token(target[tgt_types[i]], i, config.tagged ? &tags[tgt_types[i]] : nullptr));
    }
    pair.source.push_back(make_token(".", len, config.tagged ? &eos_tag : nullptr));
    pair.target.push_back(make_token(".", len, config.tagged ? &eos_tag : nullptr));
    pairs.push_back(std::move(pair));
  }
  out.bitext = Bitext(std::move(pairs));
  return out;
}

}  // namespace filtlex
