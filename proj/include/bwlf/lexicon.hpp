#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bwlf/core.hpp"

namespace bwlf {

/// A dictionary entry: a literal word, or a stem written with a trailing '*'
/// that matches any word it prefixes.
struct LexiconEntry {
    std::string text;  // without the '*'
    bool stem = false;

    bool matches(std::string_view word) const {
        return stem ? word.starts_with(text) : word == text;
    }
};

struct LexiconCategory {
    std::string name;
    std::vector<LexiconEntry> entries;
};

/// Named word categories in file order.
///
/// File format: a "[name]" line opens a category, each following non-blank
/// line is one entry, '#' starts a comment line. Entries are case-folded.
class LexiconDictionary {
public:
    LexiconDictionary() = default;

    static LexiconDictionary parse(std::string_view text);
    static LexiconDictionary load(const std::filesystem::path& path);

    /// Appends a category; throws ConfigError on a duplicate or reserved name.
    void add_category(std::string name, std::vector<LexiconEntry> entries);

    const std::vector<LexiconCategory>& categories() const { return categories_; }
    std::size_t size() const { return categories_.size(); }
    bool empty() const { return categories_.empty(); }

private:
    std::vector<LexiconCategory> categories_;
};

/// Parses one dictionary line into an entry; throws FormatError on embedded
/// whitespace, a lone '*', or a '*' anywhere but the end.
LexiconEntry parse_entry(std::string_view line);

/// Per-category membership bits for a stripped word, in category order.
std::vector<std::uint8_t> match_word(std::string_view stripped, const LexiconDictionary& dict);

/// Word-level analysis columns. Percentages are over a one-word segment, so
/// every score is 0 or 100.
struct AnalysisRow {
    std::uint32_t seg = 0;
    std::uint32_t wc = 1;
    double wps = 1.0;
    double sixltr = 0.0;
    double dic = 0.0;
    std::vector<double> category_scores;

    friend bool operator==(const AnalysisRow&, const AnalysisRow&) = default;
};

/// Words with more than this many letters count toward Sixltr.
inline constexpr std::uint32_t kSixLetterLimit = 6;

std::vector<AnalysisRow> analyze(std::span<const BwlfRecord> records, const LexiconDictionary& dict,
                                 std::string_view terminal = kDefaultTerminal);

/// Header of the analysis file: Filename, Seg, WC, WPS, Sixltr, Dic, then
/// one column per category.
std::vector<std::string> analysis_header(const LexiconDictionary& dict);

/// Comma-delimited analysis table whose identifier column is the word, so
/// the file is directly joinable onto the matrix.
std::string format_analysis(std::span<const BwlfRecord> records, std::span<const AnalysisRow> rows,
                            const LexiconDictionary& dict);
void export_analysis(std::span<const BwlfRecord> records, std::span<const AnalysisRow> rows,
                     const LexiconDictionary& dict, const std::filesystem::path& path);

/// Shortest round-trip decimal form; integral values print without a point.
std::string format_number(double value);

}  // namespace bwlf
