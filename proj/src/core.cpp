#include "bwlf/core.hpp"

#include <charconv>

#include "bwlf/delimited.hpp"
#include "bwlf/text.hpp"

namespace bwlf {

NumberedWords number_structure(std::span<const MarkedToken> stream) {
    NumberedWords out;
    std::uint32_t canto = 0;
    std::uint32_t line = 0;
    bool saw_canto_marker = false;
    std::size_t before_canto = 0;
    std::size_t before_line = 0;
    for (const auto& token : stream) {
        switch (token.kind) {
            case MarkedToken::Kind::canto_marker:
                ++canto;
                saw_canto_marker = true;
                break;
            case MarkedToken::Kind::line_marker:
                ++line;
                break;
            case MarkedToken::Kind::word:
                if (canto == 0) ++before_canto;
                if (line == 0) ++before_line;
                out.words.push_back(token.text);
                out.canto_ids.push_back(canto);
                out.line_ids.push_back(line);
                break;
        }
    }
    if (before_line > 0) {
        out.warnings.push_back(std::to_string(before_line) + " word(s) precede the first line marker; line id 0");
    }
    if (saw_canto_marker && before_canto > 0) {
        out.warnings.push_back(std::to_string(before_canto) +
                               " word(s) precede the first canto marker; canto id 0");
    }
    return out;
}

std::uint8_t detect_eos(std::string_view word, std::string_view terminal) {
    return word.find_first_of(terminal) != std::string_view::npos ? 1 : 0;
}

std::string strip_word(std::string_view word, std::string_view terminal) {
    std::string out;
    out.reserve(word.size());
    for (char c : word) {
        if (c != kQuoteChar) out.push_back(c);
    }
    while (!out.empty() && terminal.find(out.back()) != std::string_view::npos) out.pop_back();
    return out;
}

SpeechResult detect_speech(std::span<const std::string> words) {
    SpeechResult out;
    out.flags.assign(words.size(), 0);
    bool open = false;
    std::size_t start = 0;
    auto close_span = [&](std::size_t end) {
        // a span opening on the token that closed the previous one joins it
        if (!out.spans.empty() && out.spans.back().end == start) {
            out.spans.back().end = end;
        } else {
            out.spans.push_back({start, end});
        }
    };
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (char c : words[i]) {
            if (c != kQuoteChar) continue;
            if (!open) {
                open = true;
                start = i;
            } else {
                open = false;
                close_span(i);
            }
        }
    }
    if (open) {
        close_span(words.size() - 1);
        out.warnings.push_back("unpaired quotation mark opened at word " + std::to_string(start + 1) +
                               "; speech span closed at end of document");
    }
    for (const auto& span : out.spans) {
        for (std::size_t i = span.start; i <= span.end; ++i) out.flags[i] = 1;
    }
    return out;
}

MatrixResult build_matrix(std::span<const MarkedToken> stream, std::string_view terminal) {
    MatrixResult out;
    auto numbered = number_structure(stream);
    auto speech = detect_speech(numbered.words);
    out.warnings = std::move(numbered.warnings);
    out.warnings.insert(out.warnings.end(), speech.warnings.begin(), speech.warnings.end());

    out.records.reserve(numbered.words.size());
    for (std::size_t i = 0; i < numbered.words.size(); ++i) {
        BwlfRecord r;
        r.canto = numbered.canto_ids[i];
        r.line = numbered.line_ids[i];
        r.word = std::move(numbered.words[i]);
        const auto stripped = strip_word(r.word, terminal);
        if (stripped.empty()) {
            out.warnings.push_back("word " + std::to_string(i + 1) + " ('" + r.word +
                                   "') has no letters after stripping; charnum 0");
        }
        r.charnum = static_cast<std::uint32_t>(utf8_length(stripped));
        r.speech = speech.flags[i];
        r.eos = detect_eos(r.word, terminal);
        out.records.push_back(std::move(r));
    }
    return out;
}

std::vector<std::string> record_fields(const BwlfRecord& r) {
    return {std::to_string(r.canto),   std::to_string(r.line),   r.word,
            std::to_string(r.charnum), std::to_string(r.speech), std::to_string(r.eos)};
}

std::string format_matrix(std::span<const BwlfRecord> records) {
    std::string out(kMatrixHeader);
    out.push_back('\n');
    for (const auto& r : records) {
        out += io::format_record(record_fields(r), ',');
        out.push_back('\n');
    }
    return out;
}

namespace {

template <typename T>
T parse_uint(const std::string& field, std::size_t line_no, std::string_view column) {
    T value{};
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw FormatError("matrix line " + std::to_string(line_no) + ": column " + std::string(column) +
                          " is not a non-negative integer: '" + field + "'");
    }
    return value;
}

}  // namespace

std::vector<BwlfRecord> parse_matrix(std::string_view text) {
    const auto lines = io::split_lines(text);
    if (lines.empty() || lines.front() != kMatrixHeader) {
        throw FormatError("matrix header must be '" + std::string(kMatrixHeader) + "'");
    }
    std::vector<BwlfRecord> records;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        if (lines[n].empty()) continue;
        const auto f = io::split_record(lines[n], ',');
        if (f.size() != 6) {
            throw FormatError("matrix line " + std::to_string(n + 1) + ": expected 6 fields, found " +
                              std::to_string(f.size()));
        }
        BwlfRecord r;
        r.canto = parse_uint<std::uint32_t>(f[0], n + 1, "canto");
        r.line = parse_uint<std::uint32_t>(f[1], n + 1, "line");
        r.word = f[2];
        r.charnum = parse_uint<std::uint32_t>(f[3], n + 1, "charnum");
        const auto speech = parse_uint<unsigned>(f[4], n + 1, "speech");
        const auto eos = parse_uint<unsigned>(f[5], n + 1, "eos");
        if (speech > 1 || eos > 1) {
            throw FormatError("matrix line " + std::to_string(n + 1) + ": speech and eos must be 0 or 1");
        }
        r.speech = static_cast<std::uint8_t>(speech);
        r.eos = static_cast<std::uint8_t>(eos);
        records.push_back(std::move(r));
    }
    return records;
}

void export_matrix(std::span<const BwlfRecord> records, const std::filesystem::path& path) {
    io::write_file_atomic(path, format_matrix(records));
}

std::vector<BwlfRecord> import_matrix(const std::filesystem::path& path) {
    try {
        return parse_matrix(io::read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string format_wordlist(std::span<const BwlfRecord> records) {
    std::string out;
    for (const auto& r : records) {
        out += r.word;
        out.push_back('\n');
    }
    return out;
}

void export_wordlist(std::span<const BwlfRecord> records, const std::filesystem::path& path) {
    io::write_file_atomic(path, format_wordlist(records));
}

}  // namespace bwlf
