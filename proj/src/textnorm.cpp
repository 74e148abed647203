#include "mtsieve/textnorm.hpp"

#include "mtsieve/errors.hpp"
#include "unicode.hpp"

namespace mtsieve {

namespace {

std::u32string decode_or_throw(std::string_view text) {
    std::u32string cps;
    std::size_t bad = 0;
    if (!uni::decode_utf8(text, cps, bad)) throw InvalidEncoding(bad);
    return cps;
}

}  // namespace

std::string normalize(std::string_view text) {
    const std::u32string composed = uni::nfc(decode_or_throw(text));

    std::u32string collapsed;
    collapsed.reserve(composed.size());
    bool pending_space = false;
    for (char32_t cp : composed) {
        if (uni::is_whitespace(cp)) {
            pending_space = !collapsed.empty();
            continue;
        }
        if (pending_space) {
            collapsed.push_back(U' ');
            pending_space = false;
        }
        collapsed.push_back(cp);
    }
    return uni::encode_utf8(collapsed);
}

TokenSequence tokenize(std::string_view text) {
    const std::string norm = normalize(text);
    std::u32string cps;
    std::size_t bad = 0;
    uni::decode_utf8(norm, cps, bad);  // cannot fail: normalize re-encoded it

    TokenSequence tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    };
    for (char32_t cp : cps) {
        if (cp == U' ') {
            flush();
        } else if (uni::is_punctuation(cp)) {
            flush();
            std::string punct;
            uni::append_utf8(cp, punct);
            tokens.push_back(std::move(punct));
        } else {
            uni::append_utf8(cp, current);
        }
    }
    flush();
    return tokens;
}

std::string join_tokens(const TokenSequence& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

}  // namespace mtsieve
