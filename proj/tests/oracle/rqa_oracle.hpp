#pragma once

// Brute-force recurrence oracle used only by tests. It materialises the
// plot as an explicit set of index pairs and walks every diagonal of both
// triangles cell by cell, sharing no code with the library.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Metrics {
    double rr = 0;
    double det = 0;
    std::size_t maxline = 0;
    double meanline = 0;
};

using PointSet = std::set<std::pair<std::size_t, std::size_t>>;

/// All recurrent (i, j) pairs, 1-based, diagonal included.
inline PointSet recurrent_points(const std::vector<std::string>& v) {
    PointSet pts;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[i] == v[j]) pts.insert({i + 1, j + 1});
    return pts;
}

inline Metrics rqa(const std::vector<std::string>& v, std::size_t lmin) {
    const std::size_t n = v.size();
    const PointSet pts = recurrent_points(v);
    std::size_t off = 0;
    for (const auto& [i, j] : pts)
        if (i != j) ++off;

    // Lines: maximal runs along each diagonal j - i = d, d != 0.
    std::size_t on_lines = 0, lines = 0, maxline = 0, total_len = 0;
    for (long d = -static_cast<long>(n) + 1; d < static_cast<long>(n); ++d) {
        if (d == 0) continue;
        std::size_t run = 0;
        for (long i = 1; i <= static_cast<long>(n) + 1; ++i) {
            const long j = i + d;
            const bool in = i <= static_cast<long>(n) && j >= 1 && j <= static_cast<long>(n) &&
                            pts.count({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
            if (in) {
                ++run;
            } else {
                if (run >= lmin) {
                    on_lines += run;
                    ++lines;
                    total_len += run;
                    if (run > maxline) maxline = run;
                }
                run = 0;
            }
        }
    }
    Metrics m;
    m.rr = n > 1 ? static_cast<double>(off) / static_cast<double>(n * n - n) : 0.0;
    m.det = off ? static_cast<double>(on_lines) / static_cast<double>(off) : 0.0;
    m.maxline = maxline;
    m.meanline = lines ? static_cast<double>(total_len) / static_cast<double>(lines) : 0.0;
    return m;
}

}  // namespace oracle
