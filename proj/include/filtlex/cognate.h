#ifndef FILTLEX_COGNATE_H
#define FILTLEX_COGNATE_H

#include <cstddef>
#include <string_view>

#include "filtlex/corpus.h"

namespace filtlex {

struct LcsrParams {
  double cutoff = 0.58;
  std::size_t min_alpha_len = 2;

  // Throws ConfigError for a negative or non-finite cutoff or a zero
  // min_alpha_len. A cutoff above 1 disables alphabetic matching.
  void validate() const;
};

// Length of the longest common (not necessarily contiguous) subsequence of
// the two strings' code points. O(|a|*|b|) time, O(min(|a|,|b|)) space.
std::size_t lcs_length(std::u32string_view a, std::u32string_view b);
std::size_t lcs_length(std::string_view a, std::string_view b);

// lcs_length / length of the longer string, lengths in code points.
// Throws ContractError if both strings are empty.
double lcsr(std::string_view a, std::string_view b);

// Non-empty and made only of letters.
bool is_alphabetic(std::string_view word);

// Alphabetic words of at least min_alpha_len letters are cognates when
// their LCSR reaches the cutoff. Any other token is a cognate only of an
// identical non-alphabetic token (numbers, punctuation).
bool is_cognate(std::string_view a, std::string_view b, const LcsrParams& params);
inline bool is_cognate(const Token& a, const Token& b, const LcsrParams& params) {
  return is_cognate(a.surface, b.surface, params);
}

}  // namespace filtlex

#endif
