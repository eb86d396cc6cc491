#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "bwlf/core.hpp"
#include "bwlf/delimited.hpp"

namespace bwlf {

enum class Delimiter : char { tab = '\t', comma = ',' };

/// Per-word output of an external analyzer: an identifier column followed by
/// numeric columns. Values keep their original spelling for pass-through.
struct ExternalTable {
    std::string identifier_header;            // normally "Filename"
    std::vector<std::string> numeric_headers;
    std::vector<std::string> identifiers;
    std::vector<std::vector<std::string>> values;  // rows x numeric_headers

    std::size_t row_count() const { return identifiers.size(); }
};

ExternalTable parse_external(std::string_view text, Delimiter delimiter);
ExternalTable import_external(const std::filesystem::path& path, Delimiter delimiter);

/// Matrix columns followed by the external numeric columns, row-aligned.
struct IntegratedTable {
    io::Record header;
    std::vector<io::Record> rows;
    Warnings warnings;
};

/// Positional join. Throws MismatchError when the row counts differ. With
/// `verify`, warns for each row whose identifier differs from the word
/// (compared case-insensitively).
IntegratedTable join_rows(std::span<const BwlfRecord> records, const ExternalTable& table, bool verify = false);

std::string format_integrated(const IntegratedTable& table);
void write_integrated(const IntegratedTable& table, const std::filesystem::path& path);

}  // namespace bwlf
