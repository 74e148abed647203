#include "unicode.hpp"

#include <algorithm>

namespace mtsieve::uni {

namespace {

struct CpRange {
    char32_t first;
    char32_t last;
};

struct CccEntry {
    char32_t cp;
    std::uint8_t ccc;
};

struct DecompEntry {
    char32_t cp;
    std::uint32_t offset;
    std::uint32_t len;
};

struct CompEntry {
    char32_t first;
    char32_t second;
    char32_t composed;
};

#include "unicode_tables.inc"

template <std::size_t N>
bool in_ranges(const CpRange (&table)[N], char32_t cp) {
    auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                               [](char32_t v, const CpRange& r) { return v < r.first; });
    return it != std::begin(table) && cp <= (it - 1)->last;
}

// Hangul syllable arithmetic (Unicode ch. 3.12).
constexpr char32_t kSBase = 0xAC00, kLBase = 0x1100, kVBase = 0x1161, kTBase = 0x11A7;
constexpr int kLCount = 19, kVCount = 21, kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = kLCount * kNCount;

bool is_hangul_syllable(char32_t cp) {
    return cp >= kSBase && cp < kSBase + static_cast<char32_t>(kSCount);
}

void decompose_hangul(char32_t cp, std::u32string& out) {
    int s = static_cast<int>(cp - kSBase);
    out.push_back(kLBase + s / kNCount);
    out.push_back(kVBase + (s % kNCount) / kTCount);
    if (s % kTCount != 0) out.push_back(kTBase + s % kTCount);
}

char32_t compose_hangul(char32_t a, char32_t b) {
    if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount) {
        int l = static_cast<int>(a - kLBase);
        int v = static_cast<int>(b - kVBase);
        return kSBase + static_cast<char32_t>((l * kVCount + v) * kTCount);
    }
    if (is_hangul_syllable(a) && (a - kSBase) % kTCount == 0 && b > kTBase &&
        b < kTBase + kTCount) {
        return a + (b - kTBase);
    }
    return 0;
}

char32_t compose_pair(char32_t a, char32_t b) {
    if (char32_t h = compose_hangul(a, b)) return h;
    auto it = std::lower_bound(std::begin(kComposition), std::end(kComposition),
                               std::pair<char32_t, char32_t>{a, b},
                               [](const CompEntry& e, const std::pair<char32_t, char32_t>& k) {
                                   return e.first != k.first ? e.first < k.first
                                                             : e.second < k.second;
                               });
    if (it != std::end(kComposition) && it->first == a && it->second == b) return it->composed;
    return 0;
}

void decompose(char32_t cp, std::u32string& out) {
    if (is_hangul_syllable(cp)) {
        decompose_hangul(cp, out);
        return;
    }
    auto it = std::lower_bound(std::begin(kDecomp), std::end(kDecomp), cp,
                               [](const DecompEntry& e, char32_t v) { return e.cp < v; });
    if (it != std::end(kDecomp) && it->cp == cp) {
        for (std::uint32_t i = 0; i < it->len; ++i) out.push_back(kDecompPool[it->offset + i]);
    } else {
        out.push_back(cp);
    }
}

}  // namespace

bool decode_utf8(std::string_view text, std::u32string& out, std::size_t& bad_offset) {
    out.clear();
    out.reserve(text.size());
    std::size_t i = 0;
    const auto n = text.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        unsigned char lo = 0x80, hi = 0xBF;
        if (b0 >= 0xC2 && b0 <= 0xDF) {
            len = 2;
            cp = b0 & 0x1F;
        } else if (b0 >= 0xE0 && b0 <= 0xEF) {
            len = 3;
            cp = b0 & 0x0F;
            if (b0 == 0xE0) lo = 0xA0;
            if (b0 == 0xED) hi = 0x9F;  // no surrogates
        } else if (b0 >= 0xF0 && b0 <= 0xF4) {
            len = 4;
            cp = b0 & 0x07;
            if (b0 == 0xF0) lo = 0x90;
            if (b0 == 0xF4) hi = 0x8F;  // cap at U+10FFFF
        } else {
            bad_offset = i;
            return false;
        }
        for (int k = 1; k < len; ++k) {
            if (i + k >= n) {
                bad_offset = i + k;
                return false;
            }
            const auto b = static_cast<unsigned char>(text[i + k]);
            const unsigned char l = (k == 1) ? lo : 0x80;
            const unsigned char h = (k == 1) ? hi : 0xBF;
            if (b < l || b > h) {
                bad_offset = i + k;
                return false;
            }
            cp = (cp << 6) | (b & 0x3F);
        }
        out.push_back(cp);
        i += len;
    }
    return true;
}

void append_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(const std::u32string& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) append_utf8(cp, out);
    return out;
}

bool is_whitespace(char32_t cp) { return in_ranges(kWhitespaceRanges, cp); }

bool is_punctuation(char32_t cp) { return in_ranges(kPunctRanges, cp); }

int combining_class(char32_t cp) {
    auto it = std::lower_bound(std::begin(kCombiningClass), std::end(kCombiningClass), cp,
                               [](const CccEntry& e, char32_t v) { return e.cp < v; });
    if (it != std::end(kCombiningClass) && it->cp == cp) return it->ccc;
    return 0;
}

std::u32string nfc(std::u32string_view in) {
    std::u32string buf;
    buf.reserve(in.size());
    for (char32_t cp : in) decompose(cp, buf);

    // Canonical ordering: stable sort runs of nonzero combining classes.
    for (std::size_t i = 1; i < buf.size(); ++i) {
        int cc = combining_class(buf[i]);
        if (cc == 0) continue;
        std::size_t j = i;
        while (j > 0 && combining_class(buf[j - 1]) > cc) {
            std::swap(buf[j - 1], buf[j]);
            --j;
        }
    }

    if (buf.empty()) return buf;

    // Canonical composition (UAX #15): combine each character with the last
    // starter unless a character with ccc >= its own stands in between.
    std::u32string out;
    out.reserve(buf.size());
    out.push_back(buf[0]);
    std::ptrdiff_t last_starter = combining_class(buf[0]) == 0 ? 0 : -1;
    for (std::size_t i = 1; i < buf.size(); ++i) {
        const char32_t c = buf[i];
        const int cc = combining_class(c);
        if (last_starter >= 0) {
            const bool adjacent = static_cast<std::size_t>(last_starter) + 1 == out.size();
            const bool unblocked = adjacent || combining_class(out.back()) < cc;
            if (unblocked) {
                if (char32_t comp = compose_pair(out[last_starter], c)) {
                    out[last_starter] = comp;
                    continue;
                }
            }
        }
        out.push_back(c);
        if (cc == 0) last_starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
    }
    return out;
}

}  // namespace mtsieve::uni
