#pragma once

// Internal Unicode support for the text normalizer: strict UTF-8 codec,
// character class lookups, and canonical composition (NFC). Data tables are
// generated into unicode_tables.inc by scripts/gen_unicode_tables.py.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace mtsieve::uni {

// Strict decode: rejects overlong forms, surrogates, and values above
// U+10FFFF. Returns false and sets bad_offset to the first invalid byte.
bool decode_utf8(std::string_view text, std::u32string& out, std::size_t& bad_offset);

void append_utf8(char32_t cp, std::string& out);
std::string encode_utf8(const std::u32string& cps);

bool is_whitespace(char32_t cp);
bool is_punctuation(char32_t cp);  // general category P*
int combining_class(char32_t cp);

// Canonical decomposition, canonical ordering, canonical composition.
std::u32string nfc(std::u32string_view in);

}  // namespace mtsieve::uni
