#include "bwlf/delimited.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "bwlf/error.hpp"

namespace bwlf::io {

std::string format_field(std::string_view field, char delimiter) {
    const bool needs_quotes = field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) !=
                              std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_record(const Record& fields, char delimiter) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(delimiter);
        out += format_field(fields[i], delimiter);
    }
    return out;
}

Record split_record(std::string_view line, char delimiter) {
    Record fields;
    std::string current;
    std::size_t i = 0;
    while (true) {
        current.clear();
        if (i < line.size() && line[i] == '"') {
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        current.push_back('"');
                        i += 2;
                        continue;
                    }
                    ++i;
                    closed = true;
                    break;
                }
                current.push_back(line[i++]);
            }
            if (!closed) throw FormatError("unterminated quoted field");
            // anything between the closing quote and the delimiter is kept verbatim
            while (i < line.size() && line[i] != delimiter) current.push_back(line[i++]);
        } else {
            while (i < line.size() && line[i] != delimiter) current.push_back(line[i++]);
        }
        fields.push_back(current);
        if (i >= line.size()) break;
        ++i;  // delimiter
    }
    return fields;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path.string() + "'");
    return buf.str();
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        start = end + 1;
    }
    return lines;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("error writing '" + path.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot write '" + path.string() + "'");
    }
}

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return npos;
}

Table read_table(const std::filesystem::path& path, char delimiter) {
    const auto lines = split_lines(read_file(path));
    Table table;
    bool have_header = false;
    for (std::size_t n = 0; n < lines.size(); ++n) {
        if (lines[n].empty()) continue;
        Record fields;
        try {
            fields = split_record(lines[n], delimiter);
        } catch (const FormatError& e) {
            throw FormatError(path.string() + ":" + std::to_string(n + 1) + ": " + e.what());
        }
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw FormatError(path.string() + ":" + std::to_string(n + 1) + ": ragged row, expected " +
                              std::to_string(table.header.size()) + " fields, found " +
                              std::to_string(fields.size()));
        }
        table.rows.push_back(std::move(fields));
    }
    if (!have_header) throw FormatError(path.string() + ": missing header line");
    return table;
}

}  // namespace bwlf::io
