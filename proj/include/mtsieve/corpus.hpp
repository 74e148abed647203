#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mtsieve {

// Short lowercase language identifier, e.g. "eng", "ori", "hin".
class LanguageTag {
public:
    explicit LanguageTag(std::string code);
    const std::string& code() const { return code_; }
    friend bool operator==(const LanguageTag&, const LanguageTag&) = default;

private:
    std::string code_;
};

struct SentencePair {
    std::size_t index = 0;
    std::string source;
    std::string target;
    friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

// Immutable aligned bitext. Pair indices are always exactly 0..size()-1 and
// the object is safe to share across threads once constructed.
class ParallelCorpus {
public:
    ParallelCorpus(std::vector<SentencePair> pairs, LanguageTag source_lang,
                   LanguageTag target_lang);

    // Zips source and target lines; pairs are indexed in order.
    static ParallelCorpus from_lines(std::vector<std::string> source_lines,
                                     std::vector<std::string> target_lines,
                                     LanguageTag source_lang, LanguageTag target_lang);

    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    const SentencePair& operator[](std::size_t i) const { return pairs_[i]; }
    const std::vector<SentencePair>& pairs() const { return pairs_; }
    const LanguageTag& source_lang() const { return source_lang_; }
    const LanguageTag& target_lang() const { return target_lang_; }

    friend bool operator==(const ParallelCorpus&, const ParallelCorpus&) = default;

private:
    std::vector<SentencePair> pairs_;
    LanguageTag source_lang_;
    LanguageTag target_lang_;
};

struct SplitSpec {
    enum class Kind { Full, Quarter, FirstK, Fraction };

    Kind kind = Kind::Full;
    std::size_t k = 0;           // FirstK
    double f = 1.0;              // Fraction, in (0,1]
    std::uint64_t seed = 0;      // Fraction

    static SplitSpec full() { return {}; }
    static SplitSpec quarter() { return {Kind::Quarter}; }
    static SplitSpec first_k(std::size_t k);
    static SplitSpec fraction(double f, std::uint64_t seed);
};

struct CorpusStats {
    std::size_t pair_count = 0;
    std::size_t source_token_count = 0;
    std::size_t target_token_count = 0;
    // Pairs where either side tokenizes to zero tokens.
    std::size_t empty_line_count = 0;
    friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

// Reads a line-oriented UTF-8 stream; accepts LF and CRLF, strips the
// terminator. Throws InvalidEncoding with the byte offset of the first
// invalid byte.
std::vector<std::string> read_lines(std::istream& in);

ParallelCorpus load_parallel(std::istream& source_lines, std::istream& target_lines,
                             LanguageTag source_lang, LanguageTag target_lang);
ParallelCorpus load_parallel_files(const std::string& source_path, const std::string& target_path,
                                   LanguageTag source_lang, LanguageTag target_lang);

// Two-column tab-separated variant; tab is forbidden inside cells.
ParallelCorpus load_parallel_tsv(std::istream& in, LanguageTag source_lang,
                                 LanguageTag target_lang);

ParallelCorpus split(const ParallelCorpus& corpus, const SplitSpec& spec);

// Deterministically carves `size` validation pairs (uniform, without
// replacement) out of the corpus; the rest become the train side.
std::pair<ParallelCorpus, ParallelCorpus> carve_validation(const ParallelCorpus& corpus,
                                                           std::size_t size, std::uint64_t seed);

// One sentence per line, LF-terminated.
void write_parallel(const ParallelCorpus& corpus, std::ostream& source_sink,
                    std::ostream& target_sink);
void write_parallel_files(const ParallelCorpus& corpus, const std::string& source_path,
                          const std::string& target_path);

CorpusStats stats(const ParallelCorpus& corpus);

}  // namespace mtsieve
