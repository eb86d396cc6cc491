#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bwlf/error.hpp"
#include "bwlf/ingest.hpp"

namespace bwlf {

inline constexpr char kQuoteChar = '"';
inline constexpr std::string_view kDefaultTerminal = ".?!";

/// One word's row of the by-word long-form matrix.
struct BwlfRecord {
    std::uint32_t canto = 0;
    std::uint32_t line = 0;
    std::string word;
    std::uint32_t charnum = 0;
    std::uint8_t speech = 0;
    std::uint8_t eos = 0;

    friend bool operator==(const BwlfRecord&, const BwlfRecord&) = default;
};

/// Inclusive range of 0-based record indices inside one quoted span.
struct SpeechSpan {
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const SpeechSpan&, const SpeechSpan&) = default;
};

struct NumberedWords {
    std::vector<std::string> words;
    std::vector<std::uint32_t> canto_ids;
    std::vector<std::uint32_t> line_ids;
    Warnings warnings;
};

/// Removes markers, giving each word the number of canto and line markers
/// seen before it. Line numbering runs through the whole document.
NumberedWords number_structure(std::span<const MarkedToken> stream);

/// 1 when the token carries any sentence-final character.
std::uint8_t detect_eos(std::string_view word, std::string_view terminal = kDefaultTerminal);

/// Drops every double quote, then the trailing run of sentence-final
/// characters. Apostrophes stay.
std::string strip_word(std::string_view word, std::string_view terminal = kDefaultTerminal);

struct SpeechResult {
    std::vector<std::uint8_t> flags;
    std::vector<SpeechSpan> spans;
    Warnings warnings;
};

/// Pairs quote characters in order of appearance; each pair delimits a span
/// and every word from the opening token to the closing token is flagged.
SpeechResult detect_speech(std::span<const std::string> words);

struct MatrixResult {
    std::vector<BwlfRecord> records;
    Warnings warnings;
};

MatrixResult build_matrix(std::span<const MarkedToken> stream, std::string_view terminal = kDefaultTerminal);

inline constexpr std::string_view kMatrixHeader = "canto,line,word,charnum,speech,eos";

std::vector<std::string> record_fields(const BwlfRecord& record);

std::string format_matrix(std::span<const BwlfRecord> records);
std::vector<BwlfRecord> parse_matrix(std::string_view text);

void export_matrix(std::span<const BwlfRecord> records, const std::filesystem::path& path);
std::vector<BwlfRecord> import_matrix(const std::filesystem::path& path);

std::string format_wordlist(std::span<const BwlfRecord> records);
void export_wordlist(std::span<const BwlfRecord> records, const std::filesystem::path& path);

}  // namespace bwlf
