#include "bwlf/lexicon.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "bwlf/delimited.hpp"
#include "bwlf/text.hpp"

namespace bwlf {
namespace {

constexpr std::array<std::string_view, 6> kReservedColumns = {"Filename", "Seg", "WC", "WPS", "Sixltr", "Dic"};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

LexiconEntry parse_entry(std::string_view line) {
    if (line.empty()) throw FormatError("empty dictionary entry");
    if (std::any_of(line.begin(), line.end(), is_space)) {
        throw FormatError("dictionary entry '" + std::string(line) + "' contains whitespace");
    }
    if (line == "*") throw FormatError("dictionary entry '*' matches nothing specific");
    const auto star = line.find('*');
    if (star != std::string_view::npos && star != line.size() - 1) {
        throw FormatError("dictionary entry '" + std::string(line) + "': '*' is only allowed at the end");
    }
    LexiconEntry entry;
    entry.stem = star != std::string_view::npos;
    entry.text = ascii_lower(entry.stem ? line.substr(0, line.size() - 1) : line);
    return entry;
}

void LexiconDictionary::add_category(std::string name, std::vector<LexiconEntry> entries) {
    if (name.empty()) throw ConfigError("dictionary category name is empty");
    if (std::find(kReservedColumns.begin(), kReservedColumns.end(), name) != kReservedColumns.end()) {
        throw ConfigError("dictionary category name '" + name + "' is reserved for a built-in column");
    }
    for (const auto& c : categories_) {
        if (c.name == name) throw ConfigError("duplicate dictionary category '" + name + "'");
    }
    categories_.push_back({std::move(name), std::move(entries)});
}

LexiconDictionary LexiconDictionary::parse(std::string_view text) {
    LexiconDictionary dict;
    std::string name;
    std::vector<LexiconEntry> entries;
    bool open = false;
    std::size_t line_no = 0;
    for (const auto& raw : io::split_lines(text)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[') {
            if (line.size() < 3 || line.back() != ']') {
                throw FormatError("dictionary line " + std::to_string(line_no) + ": malformed category header");
            }
            if (open) dict.add_category(std::move(name), std::move(entries));
            name = std::string(trim(line.substr(1, line.size() - 2)));
            entries.clear();
            open = true;
            continue;
        }
        if (!open) {
            throw FormatError("dictionary line " + std::to_string(line_no) + ": entry before any [category]");
        }
        try {
            entries.push_back(parse_entry(line));
        } catch (const FormatError& e) {
            throw FormatError("dictionary line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (open) dict.add_category(std::move(name), std::move(entries));
    return dict;
}

LexiconDictionary LexiconDictionary::load(const std::filesystem::path& path) {
    try {
        return parse(io::read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> match_word(std::string_view stripped, const LexiconDictionary& dict) {
    const auto word = ascii_lower(stripped);
    std::vector<std::uint8_t> bits;
    bits.reserve(dict.size());
    for (const auto& category : dict.categories()) {
        const bool hit = std::any_of(category.entries.begin(), category.entries.end(),
                                     [&](const LexiconEntry& e) { return e.matches(word); });
        bits.push_back(hit ? 1 : 0);
    }
    return bits;
}

std::vector<AnalysisRow> analyze(std::span<const BwlfRecord> records, const LexiconDictionary& dict,
                                 std::string_view terminal) {
    std::vector<AnalysisRow> rows;
    rows.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        AnalysisRow row;
        row.seg = static_cast<std::uint32_t>(i + 1);
        row.sixltr = records[i].charnum > kSixLetterLimit ? 100.0 : 0.0;
        const auto bits = match_word(strip_word(records[i].word, terminal), dict);
        row.category_scores.reserve(bits.size());
        for (auto b : bits) row.category_scores.push_back(b ? 100.0 : 0.0);
        row.dic = std::find(bits.begin(), bits.end(), 1) != bits.end() ? 100.0 : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> analysis_header(const LexiconDictionary& dict) {
    std::vector<std::string> header(kReservedColumns.begin(), kReservedColumns.end());
    for (const auto& c : dict.categories()) header.push_back(c.name);
    return header;
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string format_analysis(std::span<const BwlfRecord> records, std::span<const AnalysisRow> rows,
                            const LexiconDictionary& dict) {
    if (records.size() != rows.size()) {
        throw MismatchError("analysis has " + std::to_string(rows.size()) + " rows for " +
                            std::to_string(records.size()) + " records");
    }
    std::string out = io::format_record(analysis_header(dict), ',');
    out.push_back('\n');
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        io::Record fields{records[i].word, std::to_string(r.seg), std::to_string(r.wc), format_number(r.wps),
                          format_number(r.sixltr), format_number(r.dic)};
        for (double s : r.category_scores) fields.push_back(format_number(s));
        out += io::format_record(fields, ',');
        out.push_back('\n');
    }
    return out;
}

void export_analysis(std::span<const BwlfRecord> records, std::span<const AnalysisRow> rows,
                     const LexiconDictionary& dict, const std::filesystem::path& path) {
    io::write_file_atomic(path, format_analysis(records, rows, dict));
}

}  // namespace bwlf
