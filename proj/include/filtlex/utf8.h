#ifndef FILTLEX_UTF8_H
#define FILTLEX_UTF8_H

#include <string>
#include <string_view>

namespace filtlex::utf8 {

// Decodes UTF-8 into code points. Bytes that do not start a valid sequence
// decode to U+DC80..U+DCFF so that every input maps to some sequence.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);

// Letters of the Latin, Greek and Cyrillic blocks.
bool is_letter(char32_t cp);

// Lowercases ASCII, Latin-1, Latin Extended-A, Greek and basic Cyrillic.
char32_t to_lower(char32_t cp);

std::string lowercase(std::string_view text);

}  // namespace filtlex::utf8

#endif
