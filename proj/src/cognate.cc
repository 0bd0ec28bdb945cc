#include "filtlex/cognate.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "filtlex/errors.h"
#include "filtlex/utf8.h"

namespace filtlex {

void LcsrParams::validate() const {
  // Cutoffs above 1 are allowed: they switch off alphabetic matching.
  if (!(cutoff >= 0.0) || std::isinf(cutoff))
    throw ConfigError("LCSR cutoff must be a finite non-negative number");
  if (min_alpha_len == 0) throw ConfigError("min_alpha_len must be positive");
}

std::size_t lcs_length(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return 0;
  // one row of the classic table, indexed by positions in the shorter string
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (char32_t ca : a) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = (ca == b[j - 1]) ? diag + 1 : std::max(up, row[j - 1]);
      diag = up;
    }
  }
  return row.back();
}

std::size_t lcs_length(std::string_view a, std::string_view b) {
  return lcs_length(utf8::decode(a), utf8::decode(b));
}

double lcsr(std::string_view a, std::string_view b) {
  const auto ca = utf8::decode(a);
  const auto cb = utf8::decode(b);
  const std::size_t longer = std::max(ca.size(), cb.size());
  if (longer == 0) throw ContractError("LCSR is undefined for two empty strings");
  return static_cast<double>(lcs_length(ca, cb)) / static_cast<double>(longer);
}

bool is_alphabetic(std::string_view word) {
  if (word.empty()) return false;
  const auto cps = utf8::decode(word);
  return std::all_of(cps.begin(), cps.end(), utf8::is_letter);
}

bool is_cognate(std::string_view a, std::string_view b, const LcsrParams& params) {
  const bool alpha_a = is_alphabetic(a);
  const bool alpha_b = is_alphabetic(b);
  if (!alpha_a && !alpha_b) return !a.empty() && a == b;
  if (alpha_a != alpha_b) return false;
  const auto ca = utf8::decode(a);
  const auto cb = utf8::decode(b);
  if (ca.size() < params.min_alpha_len || cb.size() < params.min_alpha_len) return false;
  const double ratio = static_cast<double>(lcs_length(ca, cb)) / static_cast<double>(std::max(ca.size(), cb.size()));
  return ratio >= params.cutoff;
}

}  // namespace filtlex
