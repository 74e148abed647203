#include "mtsieve/corpus.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

#include "mtsieve/errors.hpp"
#include "mtsieve/textnorm.hpp"
#include "unicode.hpp"

namespace mtsieve {

namespace {

// 53-bit uniform draw in [0,1); mt19937_64 output is fixed by the standard,
// so sampling is reproducible across platforms.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Knuth's selection sampling: uniform without replacement, preserves order.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> picked;
    picked.reserve(m);
    for (std::size_t i = 0; i < n && picked.size() < m; ++i) {
        const auto remaining = static_cast<double>(n - i);
        const auto need = static_cast<double>(m - picked.size());
        if (next_uniform(rng) * remaining < need) picked.push_back(i);
    }
    return picked;
}

ParallelCorpus take_indices(const ParallelCorpus& corpus, const std::vector<std::size_t>& idx) {
    std::vector<SentencePair> pairs;
    pairs.reserve(idx.size());
    for (std::size_t i : idx) {
        pairs.push_back({pairs.size(), corpus[i].source, corpus[i].target});
    }
    return {std::move(pairs), corpus.source_lang(), corpus.target_lang()};
}

ParallelCorpus take_prefix(const ParallelCorpus& corpus, std::size_t k) {
    std::vector<SentencePair> pairs(corpus.pairs().begin(), corpus.pairs().begin() + k);
    return {std::move(pairs), corpus.source_lang(), corpus.target_lang()};
}

}  // namespace

LanguageTag::LanguageTag(std::string code) : code_(std::move(code)) {
    if (code_.empty()) throw Error("language tag must not be empty");
    for (char c : code_) {
        if (c >= 'A' && c <= 'Z') throw Error("language tag must be lowercase: \"" + code_ + "\"");
        if (static_cast<unsigned char>(c) <= ' ')
            throw Error("language tag must not contain whitespace");
    }
}

ParallelCorpus::ParallelCorpus(std::vector<SentencePair> pairs, LanguageTag source_lang,
                               LanguageTag target_lang)
    : pairs_(std::move(pairs)),
      source_lang_(std::move(source_lang)),
      target_lang_(std::move(target_lang)) {
    if (source_lang_ == target_lang_)
        throw Error("source and target language tags must differ: \"" + source_lang_.code() +
                    "\"");
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].index != i)
            throw Error("pair indices must be exactly 0..n-1 in order (got " +
                        std::to_string(pairs_[i].index) + " at position " + std::to_string(i) +
                        ")");
    }
}

ParallelCorpus ParallelCorpus::from_lines(std::vector<std::string> source_lines,
                                          std::vector<std::string> target_lines,
                                          LanguageTag source_lang, LanguageTag target_lang) {
    if (source_lines.size() != target_lines.size())
        throw LineCountMismatch(source_lines.size(), target_lines.size());
    std::vector<SentencePair> pairs;
    pairs.reserve(source_lines.size());
    for (std::size_t i = 0; i < source_lines.size(); ++i) {
        pairs.push_back({i, std::move(source_lines[i]), std::move(target_lines[i])});
    }
    return {std::move(pairs), std::move(source_lang), std::move(target_lang)};
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t raw_len = line.size();
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::u32string cps;
        std::size_t bad = 0;
        if (!uni::decode_utf8(line, cps, bad)) throw InvalidEncoding(offset + bad);
        lines.push_back(std::move(line));
        offset += raw_len + 1;
    }
    return lines;
}

ParallelCorpus load_parallel(std::istream& source_lines, std::istream& target_lines,
                             LanguageTag source_lang, LanguageTag target_lang) {
    auto src = read_lines(source_lines);
    auto tgt = read_lines(target_lines);
    return ParallelCorpus::from_lines(std::move(src), std::move(tgt), std::move(source_lang),
                                      std::move(target_lang));
}

ParallelCorpus load_parallel_files(const std::string& source_path, const std::string& target_path,
                                   LanguageTag source_lang, LanguageTag target_lang) {
    std::ifstream src(source_path, std::ios::binary);
    if (!src) throw IoError("cannot open " + source_path);
    std::ifstream tgt(target_path, std::ios::binary);
    if (!tgt) throw IoError("cannot open " + target_path);
    return load_parallel(src, tgt, std::move(source_lang), std::move(target_lang));
}

ParallelCorpus load_parallel_tsv(std::istream& in, LanguageTag source_lang,
                                 LanguageTag target_lang) {
    std::vector<std::string> src, tgt;
    std::size_t line_no = 0;
    for (std::string& line : read_lines(in)) {
        ++line_no;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            throw MalformedTsv(line_no);
        src.push_back(line.substr(0, tab));
        tgt.push_back(line.substr(tab + 1));
    }
    return ParallelCorpus::from_lines(std::move(src), std::move(tgt), std::move(source_lang),
                                      std::move(target_lang));
}

SplitSpec SplitSpec::first_k(std::size_t k) {
    if (k < 1) throw Error("FirstK split requires k >= 1");
    SplitSpec s{Kind::FirstK};
    s.k = k;
    return s;
}

SplitSpec SplitSpec::fraction(double f, std::uint64_t seed) {
    if (!(f > 0.0 && f <= 1.0)) throw Error("fraction must be in (0,1]");
    SplitSpec s{Kind::Fraction};
    s.f = f;
    s.seed = seed;
    return s;
}

ParallelCorpus split(const ParallelCorpus& corpus, const SplitSpec& spec) {
    const std::size_t n = corpus.size();
    switch (spec.kind) {
        case SplitSpec::Kind::Full:
            return corpus;
        case SplitSpec::Kind::Quarter:
            return take_prefix(corpus, n / 4);
        case SplitSpec::Kind::FirstK:
            if (spec.k > n) throw FirstKTooLarge(spec.k, n);
            return take_prefix(corpus, spec.k);
        case SplitSpec::Kind::Fraction: {
            const auto m = static_cast<std::size_t>(
                std::floor(spec.f * static_cast<double>(n)));
            return take_indices(corpus, sample_indices(n, m, spec.seed));
        }
    }
    throw Error("unreachable split kind");
}

std::pair<ParallelCorpus, ParallelCorpus> carve_validation(const ParallelCorpus& corpus,
                                                           std::size_t size, std::uint64_t seed) {
    const std::size_t n = corpus.size();
    if (size == 0 || size >= n) throw SizeOutOfRange(size, n);
    const auto picked = sample_indices(n, size, seed);
    std::vector<bool> in_validation(n, false);
    for (std::size_t i : picked) in_validation[i] = true;
    std::vector<std::size_t> rest;
    rest.reserve(n - size);
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_validation[i]) rest.push_back(i);
    }
    return {take_indices(corpus, rest), take_indices(corpus, picked)};
}

void write_parallel(const ParallelCorpus& corpus, std::ostream& source_sink,
                    std::ostream& target_sink) {
    for (const SentencePair& p : corpus.pairs()) {
        source_sink << p.source << '\n';
        target_sink << p.target << '\n';
    }
    if (!source_sink || !target_sink) throw IoError("failed writing bitext");
}

void write_parallel_files(const ParallelCorpus& corpus, const std::string& source_path,
                          const std::string& target_path) {
    std::ofstream src(source_path, std::ios::binary);
    if (!src) throw IoError("cannot open " + source_path + " for writing");
    std::ofstream tgt(target_path, std::ios::binary);
    if (!tgt) throw IoError("cannot open " + target_path + " for writing");
    write_parallel(corpus, src, tgt);
    src.flush();
    tgt.flush();
    if (!src || !tgt) throw IoError("failed writing bitext");
}

CorpusStats stats(const ParallelCorpus& corpus) {
    CorpusStats s;
    s.pair_count = corpus.size();
    for (const SentencePair& p : corpus.pairs()) {
        const auto src_tokens = tokenize(p.source).size();
        const auto tgt_tokens = tokenize(p.target).size();
        s.source_token_count += src_tokens;
        s.target_token_count += tgt_tokens;
        if (src_tokens == 0 || tgt_tokens == 0) ++s.empty_line_count;
    }
    return s;
}

}  // namespace mtsieve
