#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bwlf/core.hpp"
#include "bwlf/delimited.hpp"

namespace bwlf {

/// Categorical recurrence plot: cell (i, j) is recurrent when the values at
/// positions i and j are identical. Indices are 1-based.
///
/// Values are interned to integer codes, which represent the full N x N plot
/// without materialising it.
class RecurrencePlot {
public:
    /// Throws ConfigError for an empty sequence.
    RecurrencePlot(std::span<const std::string> values, std::string key);

    std::size_t n() const { return codes_.size(); }
    const std::string& key() const { return key_; }
    std::span<const std::uint32_t> codes() const { return codes_; }

    bool recurrent(std::size_t i, std::size_t j) const { return codes_.at(i - 1) == codes_.at(j - 1); }

    /// Recurrent cells with i != j.
    std::size_t off_diagonal_count() const;

    /// Recurrent cells with i != j in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> off_diagonal_points() const;

private:
    std::vector<std::uint32_t> codes_;
    std::string key_;
};

RecurrencePlot recurrence_matrix(std::span<const std::string> values, std::string key);

struct RqaMetrics {
    std::size_t n = 0;
    std::size_t lmin = 2;
    double rr = 0.0;
    double det = 0.0;
    std::size_t maxline = 0;
    double meanline = 0.0;
};

inline constexpr std::size_t kDefaultMinLine = 2;

/// Recurrence rate, determinism, and diagonal line statistics over the
/// off-diagonal part of the plot. Lines shorter than `lmin` are ignored.
RqaMetrics rqa(const RecurrencePlot& plot, std::size_t lmin = kDefaultMinLine);

/// Column values prepared for comparison. The "word" column compares the
/// stripped, lower-cased form so "won!" recurs with "won".
std::vector<std::string> column_values(const io::Table& table, std::string_view column,
                                       std::string_view terminal = kDefaultTerminal);

std::string format_plot(const RecurrencePlot& plot);
void export_plot(const RecurrencePlot& plot, const std::filesystem::path& path);

/// "name=value" lines.
std::string format_metrics_lines(const RqaMetrics& m);
/// Header plus one delimited row.
std::string format_metrics_row(const RqaMetrics& m, std::string_view key);

}  // namespace bwlf
