#include "bwlf/recurrence.hpp"

#include <algorithm>
#include <unordered_map>

#include "bwlf/lexicon.hpp"
#include "bwlf/text.hpp"

namespace bwlf {

RecurrencePlot::RecurrencePlot(std::span<const std::string> values, std::string key) : key_(std::move(key)) {
    if (values.empty()) throw ConfigError("recurrence over an empty sequence");
    std::unordered_map<std::string_view, std::uint32_t> ids;
    codes_.reserve(values.size());
    for (const auto& v : values) {
        auto [it, inserted] = ids.try_emplace(v, static_cast<std::uint32_t>(ids.size()));
        codes_.push_back(it->second);
    }
}

std::size_t RecurrencePlot::off_diagonal_count() const {
    std::unordered_map<std::uint32_t, std::size_t> freq;
    for (auto c : codes_) ++freq[c];
    std::size_t total = 0;
    for (const auto& [code, count] : freq) total += count * (count - 1);
    return total;
}

std::vector<std::pair<std::size_t, std::size_t>> RecurrencePlot::off_diagonal_points() const {
    std::vector<std::pair<std::size_t, std::size_t>> points;
    for (std::size_t i = 0; i < codes_.size(); ++i) {
        for (std::size_t j = 0; j < codes_.size(); ++j) {
            if (i != j && codes_[i] == codes_[j]) points.emplace_back(i + 1, j + 1);
        }
    }
    return points;
}

RecurrencePlot recurrence_matrix(std::span<const std::string> values, std::string key) {
    return RecurrencePlot(values, std::move(key));
}

RqaMetrics rqa(const RecurrencePlot& plot, std::size_t lmin) {
    if (lmin < 2) throw ConfigError("lmin must be at least 2");
    const auto codes = plot.codes();
    const std::size_t n = codes.size();

    // Upper triangle only; the plot is symmetric so every count doubles.
    std::size_t points = 0;
    std::size_t line_points = 0;
    std::size_t lines = 0;
    std::size_t maxline = 0;
    for (std::size_t offset = 1; offset < n; ++offset) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + offset <= n; ++i) {
            const bool hit = i + offset < n && codes[i] == codes[i + offset];
            if (hit) {
                ++run;
                continue;
            }
            if (run >= lmin) {
                line_points += run;
                ++lines;
                maxline = std::max(maxline, run);
            }
            points += run;
            run = 0;
        }
    }

    RqaMetrics m;
    m.n = n;
    m.lmin = lmin;
    if (n > 1) m.rr = static_cast<double>(2 * points) / static_cast<double>(n * n - n);
    if (points > 0) m.det = static_cast<double>(2 * line_points) / static_cast<double>(2 * points);
    m.maxline = maxline;
    if (lines > 0) m.meanline = static_cast<double>(2 * line_points) / static_cast<double>(2 * lines);
    return m;
}

std::vector<std::string> column_values(const io::Table& table, std::string_view column, std::string_view terminal) {
    const auto idx = table.column(column);
    if (idx == io::Table::npos) throw ConfigError("no column named '" + std::string(column) + "'");
    std::vector<std::string> values;
    values.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        if (column == "word") {
            values.push_back(ascii_lower(strip_word(row[idx], terminal)));
        } else {
            values.push_back(row[idx]);
        }
    }
    return values;
}

std::string format_plot(const RecurrencePlot& plot) {
    std::string out = "i,j\n";
    for (const auto& [i, j] : plot.off_diagonal_points()) {
        out += std::to_string(i);
        out.push_back(',');
        out += std::to_string(j);
        out.push_back('\n');
    }
    return out;
}

void export_plot(const RecurrencePlot& plot, const std::filesystem::path& path) {
    io::write_file_atomic(path, format_plot(plot));
}

std::string format_metrics_lines(const RqaMetrics& m) {
    std::string out;
    out += "n=" + std::to_string(m.n) + "\n";
    out += "lmin=" + std::to_string(m.lmin) + "\n";
    out += "rr=" + format_number(m.rr) + "\n";
    out += "det=" + format_number(m.det) + "\n";
    out += "maxline=" + std::to_string(m.maxline) + "\n";
    out += "meanline=" + format_number(m.meanline) + "\n";
    return out;
}

std::string format_metrics_row(const RqaMetrics& m, std::string_view key) {
    io::Record row{std::string(key),      std::to_string(m.n),     std::to_string(m.lmin), format_number(m.rr),
                   format_number(m.det),  std::to_string(m.maxline), format_number(m.meanline)};
    return "key,n,lmin,rr,det,maxline,meanline\n" + io::format_record(row, ',') + "\n";
}

}  // namespace bwlf
