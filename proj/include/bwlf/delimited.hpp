#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace bwlf::io {

using Record = std::vector<std::string>;

/// Quotes `field` when it contains the delimiter, a double quote, or a line
/// break; embedded quotes are doubled.
std::string format_field(std::string_view field, char delimiter);

std::string format_record(const Record& fields, char delimiter);

/// Splits one physical line into fields, honouring quoted fields.
/// Throws FormatError on an unterminated quote.
Record split_record(std::string_view line, char delimiter);

/// Whole-file read; throws IoError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Splits text into lines on '\n', dropping one trailing '\r' per line.
/// A final newline does not produce an extra empty line.
std::vector<std::string> split_lines(std::string_view text);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so a failed write never leaves a truncated file behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// A header plus body rows, as read from a delimited file.
struct Table {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Record header;
    std::vector<Record> rows;

    /// Index of `name` in the header, or npos.
    std::size_t column(std::string_view name) const;
};

/// Reads a delimited file whose first line is a header. Every row must have
/// as many fields as the header. Blank lines are skipped.
Table read_table(const std::filesystem::path& path, char delimiter);

}  // namespace bwlf::io
