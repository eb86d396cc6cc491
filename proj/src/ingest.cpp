#include "bwlf/ingest.hpp"

#include <algorithm>
#include <optional>
#include <regex>

#include "bwlf/delimited.hpp"
#include "bwlf/error.hpp"
#include "bwlf/text.hpp"

namespace bwlf {
namespace {

std::regex compile(const std::string& pattern, std::string_view key) {
    try {
        return std::regex(pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
        throw ConfigError(std::string(key) + ": invalid regular expression '" + pattern + "': " + e.what());
    }
}

bool contains(std::string_view set, char c) { return set.find(c) != std::string_view::npos; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

template <typename Enum>
Enum parse_enum(std::string_view key, std::string_view value,
                std::initializer_list<std::pair<std::string_view, Enum>> options) {
    for (const auto& [name, e] : options) {
        if (value == name) return e;
    }
    std::string allowed;
    for (const auto& [name, e] : options) {
        if (!allowed.empty()) allowed += ", ";
        allowed += name;
    }
    throw ConfigError(std::string(key) + ": unknown value '" + std::string(value) + "' (expected one of " +
                      allowed + ")");
}

}  // namespace

void CleanupRules::validate() const {
    for (char c : remove_chars) {
        if (contains(keep_terminal, c)) {
            throw ConfigError(std::string("character '") + c + "' is in both remove_chars and keep_terminal");
        }
    }
    if (!canto_pattern.empty()) compile(canto_pattern, "canto_pattern");
    if (line_policy == LinePolicy::pattern) {
        if (line_pattern.empty()) throw ConfigError("line_policy = pattern requires line_pattern");
        compile(line_pattern, "line_pattern");
    }
}

CleanupRules parse_rules(std::string_view text) {
    CleanupRules rules;
    std::size_t line_no = 0;
    for (const auto& raw : io::split_lines(text)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("rules line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string value(trim(line.substr(eq + 1)));
        if (key == "remove_chars") {
            rules.remove_chars = value;
        } else if (key == "keep_terminal") {
            rules.keep_terminal = value;
        } else if (key == "hyphen_policy") {
            rules.hyphen_policy =
                parse_enum<HyphenPolicy>(key, value, {{"split", HyphenPolicy::split}, {"keep", HyphenPolicy::keep}});
        } else if (key == "case_policy") {
            rules.case_policy =
                parse_enum<CasePolicy>(key, value, {{"lower", CasePolicy::lower}, {"preserve", CasePolicy::preserve}});
        } else if (key == "canto_pattern") {
            rules.canto_pattern = value;
        } else if (key == "canto_policy") {
            rules.canto_policy = parse_enum<CantoPolicy>(
                key, value, {{"heading", CantoPolicy::heading}, {"inline", CantoPolicy::inline_start}});
        } else if (key == "line_policy") {
            rules.line_policy = parse_enum<LinePolicy>(
                key, value, {{"every_source_line", LinePolicy::every_source_line}, {"pattern", LinePolicy::pattern}});
        } else if (key == "line_pattern") {
            rules.line_pattern = value;
        } else {
            throw ConfigError("rules line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    rules.validate();
    return rules;
}

CleanupRules load_rules(const std::filesystem::path& path) {
    try {
        return parse_rules(io::read_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string MarkedToken::spelling() const {
    switch (kind) {
        case Kind::canto_marker: return std::string(kCantoSpelling);
        case Kind::line_marker: return std::string(kLineSpelling);
        case Kind::word: break;
    }
    return text;
}

std::vector<std::string> clean_line(std::string_view line, const CleanupRules& rules) {
    std::string cleaned;
    cleaned.reserve(line.size());
    for (char c : line) {
        if (contains(rules.remove_chars, c)) continue;
        if (c == '-' && rules.hyphen_policy == HyphenPolicy::split) c = ' ';
        cleaned.push_back(c);
    }
    if (rules.case_policy == CasePolicy::lower) cleaned = ascii_lower(cleaned);

    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < cleaned.size()) {
        while (i < cleaned.size() && is_space(cleaned[i])) ++i;
        const std::size_t start = i;
        while (i < cleaned.size() && !is_space(cleaned[i])) ++i;
        if (i == start) continue;
        std::string token = cleaned.substr(start, i - start);
        // a free-standing dash is punctuation, never a word
        if (std::all_of(token.begin(), token.end(), [](char c) { return c == '-'; })) continue;
        tokens.push_back(std::move(token));
    }
    return tokens;
}

std::vector<MarkedToken> mark_structure(std::string_view document, const CleanupRules& rules) {
    std::optional<std::regex> canto;
    if (!rules.canto_pattern.empty()) canto = compile(rules.canto_pattern, "canto_pattern");
    std::optional<std::regex> line_start;
    if (rules.line_policy == LinePolicy::pattern) {
        if (rules.line_pattern.empty()) throw ConfigError("line_policy = pattern requires line_pattern");
        line_start = compile(rules.line_pattern, "line_pattern");
    }

    std::vector<MarkedToken> stream;
    for (const auto& line : io::split_lines(document)) {
        if (canto && std::regex_search(line, *canto)) {
            stream.push_back(MarkedToken::canto());
            if (rules.canto_policy == CantoPolicy::heading) continue;
        }
        auto words = clean_line(line, rules);
        if (words.empty()) continue;
        if (!line_start || std::regex_search(line, *line_start)) stream.push_back(MarkedToken::line());
        for (auto& w : words) stream.push_back(MarkedToken::word(std::move(w)));
    }
    return stream;
}

std::string format_cleaned(std::span<const MarkedToken> stream) {
    std::string out;
    for (const auto& token : stream) {
        out += io::format_field(token.spelling(), ',');
        out.push_back('\n');
    }
    return out;
}

std::vector<MarkedToken> parse_cleaned(std::string_view text) {
    std::vector<MarkedToken> stream;
    std::size_t line_no = 0;
    for (const auto& line : io::split_lines(text)) {
        ++line_no;
        if (line.empty()) continue;
        io::Record fields;
        try {
            fields = io::split_record(line, ',');
        } catch (const FormatError& e) {
            throw FormatError("cleaned token file line " + std::to_string(line_no) + ": " + e.what());
        }
        // tolerate several tokens per record as well as one per line
        for (auto& field : fields) {
            if (field.empty()) continue;
            if (field == kCantoSpelling) {
                stream.push_back(MarkedToken::canto());
            } else if (field == kLineSpelling) {
                stream.push_back(MarkedToken::line());
            } else {
                stream.push_back(MarkedToken::word(std::move(field)));
            }
        }
    }
    return stream;
}

void write_cleaned(std::span<const MarkedToken> stream, const std::filesystem::path& path) {
    io::write_file_atomic(path, format_cleaned(stream));
}

std::vector<MarkedToken> read_cleaned(const std::filesystem::path& path) {
    return parse_cleaned(io::read_file(path));
}

}  // namespace bwlf
