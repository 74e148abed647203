#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mtsieve {

// Normalized token list for one sentence. Tokens are never empty and never
// contain whitespace.
using TokenSequence = std::vector<std::string>;

// Canonical Unicode composition (NFC), whitespace runs collapsed to single
// ASCII spaces, leading/trailing whitespace removed. No case folding.
// Throws InvalidEncoding on malformed UTF-8.
std::string normalize(std::string_view text);

// normalize(), split on spaces, then split each punctuation character
// (general category P*) into its own token. Letters and digits of any
// script stay joined.
TokenSequence tokenize(std::string_view text);

// Tokens joined with single spaces.
std::string join_tokens(const TokenSequence& tokens);

}  // namespace mtsieve
