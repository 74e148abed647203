#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mtsieve {

// Base class for every recoverable error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// File or stream could not be opened / written.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

// The two sides of a bitext differ in line count.
class LineCountMismatch : public Error {
public:
    LineCountMismatch(std::size_t n_source, std::size_t n_target)
        : Error("line count mismatch: " + std::to_string(n_source) + " source lines vs " +
                std::to_string(n_target) + " target lines"),
          n_source(n_source), n_target(n_target) {}
    std::size_t n_source;
    std::size_t n_target;
};

// Input is not valid UTF-8; offset is the position of the first bad byte.
class InvalidEncoding : public Error {
public:
    explicit InvalidEncoding(std::size_t byte_offset)
        : Error("invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
          byte_offset(byte_offset) {}
    std::size_t byte_offset;
};

// A TSV bitext line does not have exactly two columns.
class MalformedTsv : public Error {
public:
    explicit MalformedTsv(std::size_t line_number)
        : Error("malformed TSV bitext at line " + std::to_string(line_number) +
                ": expected exactly 2 tab-separated columns"),
          line_number(line_number) {}
    std::size_t line_number;
};

class FirstKTooLarge : public Error {
public:
    FirstKTooLarge(std::size_t k, std::size_t n)
        : Error("cannot take first " + std::to_string(k) + " pairs of a " + std::to_string(n) +
                "-pair corpus"),
          k(k), n(n) {}
    std::size_t k;
    std::size_t n;
};

// Validation carve size must satisfy 0 < size < corpus size.
class SizeOutOfRange : public Error {
public:
    SizeOutOfRange(std::size_t size, std::size_t n)
        : Error("validation size " + std::to_string(size) + " out of range for a " +
                std::to_string(n) + "-pair corpus"),
          size(size), n(n) {}
    std::size_t size;
    std::size_t n;
};

// Hypothesis and reference collections differ in length.
class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t n_hyps, std::size_t n_refs)
        : Error("length mismatch: " + std::to_string(n_hyps) + " hypotheses vs " +
                std::to_string(n_refs) + " references"),
          n_hyps(n_hyps), n_refs(n_refs) {}
    std::size_t n_hyps;
    std::size_t n_refs;
};

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& what = "empty input") : Error(what) {}
};

class EmptyCorpus : public Error {
public:
    EmptyCorpus() : Error("corpus is empty") {}
};

class EmptyValidation : public Error {
public:
    EmptyValidation() : Error("validation corpus is empty") {}
};

// A subword sequence ends on a continuation-marked token.
class MalformedMarker : public Error {
public:
    explicit MalformedMarker(const std::string& token)
        : Error("subword sequence ends on continuation-marked token \"" + token + "\""),
          token(token) {}
    std::string token;
};

// A BPE model file failed to parse; line number is 1-based.
class MalformedModel : public Error {
public:
    MalformedModel(std::size_t line_number, const std::string& reason)
        : Error("malformed BPE model at line " + std::to_string(line_number) + ": " + reason),
          line_number(line_number) {}
    std::size_t line_number;
};

// Corpus and translator language directions disagree.
class DirectionMismatch : public Error {
public:
    explicit DirectionMismatch(const std::string& what) : Error(what) {}
};

// A translator backend failed. When raised while scoring a corpus, `index`
// is the ordinal of the first pair affected.
class TranslationFailed : public Error {
public:
    explicit TranslationFailed(const std::string& what,
                               std::optional<std::size_t> index = std::nullopt)
        : Error(index ? "pair " + std::to_string(*index) + ": " + what : what),
          index(index), reason(what) {}
    std::optional<std::size_t> index;
    std::string reason;
};

}  // namespace mtsieve
