#include "bwlf/integrate.hpp"

#include <charconv>

#include "bwlf/text.hpp"

namespace bwlf {
namespace {

bool is_number(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

ExternalTable parse_external(std::string_view text, Delimiter delimiter) {
    const char delim = static_cast<char>(delimiter);
    const auto lines = io::split_lines(text);
    ExternalTable table;
    bool have_header = false;
    std::size_t width = 0;
    for (std::size_t n = 0; n < lines.size(); ++n) {
        if (lines[n].empty()) continue;
        const auto line_no = std::to_string(n + 1);
        io::Record fields;
        try {
            fields = io::split_record(lines[n], delim);
        } catch (const FormatError& e) {
            throw FormatError("line " + line_no + ": " + e.what());
        }
        if (!have_header) {
            if (fields.size() < 1) throw FormatError("line " + line_no + ": empty header");
            table.identifier_header = fields.front();
            table.numeric_headers.assign(fields.begin() + 1, fields.end());
            width = fields.size();
            have_header = true;
            continue;
        }
        if (fields.size() != width) {
            throw FormatError("line " + line_no + ": ragged row, expected " + std::to_string(width) +
                              " fields, found " + std::to_string(fields.size()));
        }
        for (std::size_t c = 1; c < fields.size(); ++c) {
            if (!is_number(fields[c])) {
                throw FormatError("line " + line_no + ": column '" + table.numeric_headers[c - 1] +
                                  "' is not numeric: '" + fields[c] + "'");
            }
        }
        table.identifiers.push_back(fields.front());
        table.values.emplace_back(fields.begin() + 1, fields.end());
    }
    if (!have_header) throw FormatError("missing header line");
    return table;
}

ExternalTable import_external(const std::filesystem::path& path, Delimiter delimiter) {
    try {
        return parse_external(io::read_file(path), delimiter);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

IntegratedTable join_rows(std::span<const BwlfRecord> records, const ExternalTable& table, bool verify) {
    if (records.size() != table.row_count()) {
        throw MismatchError("row count mismatch: " + std::to_string(records.size()) + " matrix records vs " +
                            std::to_string(table.row_count()) + " analysis rows");
    }
    IntegratedTable out;
    out.header = io::split_record(kMatrixHeader, ',');
    out.header.insert(out.header.end(), table.numeric_headers.begin(), table.numeric_headers.end());
    out.rows.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto row = record_fields(records[i]);
        row.insert(row.end(), table.values[i].begin(), table.values[i].end());
        out.rows.push_back(std::move(row));
        if (verify && ascii_lower(table.identifiers[i]) != ascii_lower(records[i].word)) {
            out.warnings.push_back("row " + std::to_string(i + 1) + ": identifier '" + table.identifiers[i] +
                                   "' differs from word '" + records[i].word + "'");
        }
    }
    return out;
}

std::string format_integrated(const IntegratedTable& table) {
    std::string out = io::format_record(table.header, ',');
    out.push_back('\n');
    for (const auto& row : table.rows) {
        out += io::format_record(row, ',');
        out.push_back('\n');
    }
    return out;
}

void write_integrated(const IntegratedTable& table, const std::filesystem::path& path) {
    io::write_file_atomic(path, format_integrated(table));
}

}  // namespace bwlf
