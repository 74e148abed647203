#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mtsieve/textnorm.hpp"

namespace mtsieve {

// Ordered byte-pair merge rules plus the continuation marker appended to
// every non-final subword of a word.
class BpeModel {
public:
    using MergePair = std::pair<std::string, std::string>;

    static constexpr const char* kDefaultMarker = "@@";

    BpeModel() = default;
    explicit BpeModel(std::vector<MergePair> merges, std::string marker = kDefaultMarker);

    const std::vector<MergePair>& merges() const { return merges_; }
    const std::string& marker() const { return marker_; }

    // Line-oriented text format: marker on the first line, then one merge
    // pair per line separated by a single space.
    void save(std::ostream& out) const;
    static BpeModel load(std::istream& in);
    static BpeModel load_file(const std::string& path);
    void save_file(const std::string& path) const;

    friend bool operator==(const BpeModel&, const BpeModel&) = default;

private:
    std::vector<MergePair> merges_;
    std::string marker_ = kDefaultMarker;
};

// Learns `num_merges` merge rules: repeatedly record the most frequent
// adjacent symbol pair (ties to the lexicographically smaller pair) and
// stop early once no pair occurs at least twice.
BpeModel bpe_learn(const std::vector<TokenSequence>& lines, std::size_t num_merges);

// Splits each token into subwords; non-final subwords carry the marker.
TokenSequence bpe_apply(const BpeModel& model, const TokenSequence& tokens);

// Reassembles marked subwords into whole words. Throws MalformedMarker when
// the sequence ends on a continuation-marked token.
TokenSequence bpe_decode(const TokenSequence& tokens,
                         const std::string& marker = BpeModel::kDefaultMarker);

namespace detail {
// Marker occurrences in raw text are escaped so bpe_decode can always tell
// an appended marker from literal text; unescape inverts exactly.
std::string bpe_escape(const std::string& word, const std::string& marker);
std::string bpe_unescape(const std::string& word, const std::string& marker);
}  // namespace detail

}  // namespace mtsieve
