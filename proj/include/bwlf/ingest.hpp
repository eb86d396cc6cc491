#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bwlf {

enum class HyphenPolicy { split, keep };
enum class CasePolicy { lower, preserve };
enum class LinePolicy { every_source_line, pattern };

/// What happens to a source line matched by `canto_pattern`: a heading is
/// consumed, an inline boundary is also tokenized as ordinary text.
enum class CantoPolicy { heading, inline_start };

/// Character-level cleanup and structure-marking rules.
///
/// The defaults reproduce the Beowulf worked example except for the two
/// patterns, which are corpus-specific (see data/beowulf.rules).
struct CleanupRules {
    std::string remove_chars = ",:;";
    std::string keep_terminal = ".?!";
    HyphenPolicy hyphen_policy = HyphenPolicy::split;
    CasePolicy case_policy = CasePolicy::lower;
    std::string canto_pattern;  // empty: no canto boundaries
    CantoPolicy canto_policy = CantoPolicy::heading;
    LinePolicy line_policy = LinePolicy::every_source_line;
    std::string line_pattern;  // required when line_policy == pattern

    /// Throws ConfigError when the character sets overlap or a pattern does
    /// not compile.
    void validate() const;
};

/// Parses the flat `key = value` rules format. Lines starting with '#' and
/// blank lines are ignored; unknown keys are errors.
CleanupRules parse_rules(std::string_view text);
CleanupRules load_rules(const std::filesystem::path& path);

struct MarkedToken {
    enum class Kind { word, canto_marker, line_marker };

    Kind kind = Kind::word;
    std::string text;  // empty for markers

    static MarkedToken word(std::string text) { return {Kind::word, std::move(text)}; }
    static MarkedToken canto() { return {Kind::canto_marker, {}}; }
    static MarkedToken line() { return {Kind::line_marker, {}}; }

    bool is_word() const { return kind == Kind::word; }

    /// Serialized spelling: the word itself, "[canto]" or "[line]".
    std::string spelling() const;

    friend bool operator==(const MarkedToken&, const MarkedToken&) = default;
};

inline constexpr std::string_view kCantoSpelling = "[canto]";
inline constexpr std::string_view kLineSpelling = "[line]";

/// Cleans one source line and splits it into word tokens.
std::vector<std::string> clean_line(std::string_view line, const CleanupRules& rules);

/// Cleans a whole document and interleaves canto and line markers.
std::vector<MarkedToken> mark_structure(std::string_view document, const CleanupRules& rules);

/// Serializes a marked stream as a one-column comma-delimited file.
std::string format_cleaned(std::span<const MarkedToken> stream);
std::vector<MarkedToken> parse_cleaned(std::string_view text);

void write_cleaned(std::span<const MarkedToken> stream, const std::filesystem::path& path);
std::vector<MarkedToken> read_cleaned(const std::filesystem::path& path);

}  // namespace bwlf
