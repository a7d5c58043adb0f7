#pragma once

// Test-only reference computations. These deliberately avoid the library's
// solvers and formulas: they work from raw lattice point sets.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace brute {

using Point = std::pair<int, int>;

inline std::set<Point> points(int x, int y, int l)
{
    std::set<Point> s;
    for (int t = 0; t <= l; ++t)
        s.insert({x + t, y + t});
    return s;
}

inline bool disjoint(const std::set<Point>& a, const std::set<Point>& b)
{
    for (const auto& p : a)
        if (b.count(p))
            return false;
    return true;
}

inline std::vector<Point> anchors(int n, int l)
{
    std::vector<Point> out;
    for (int y = 0; y + l <= n; ++y)
        for (int x = 0; x + l <= n; ++x)
            out.push_back({x, y});
    return out;
}

/// Largest pairwise point-disjoint subset, by trying every subset.
inline int max_packing(int n, int l)
{
    const auto cand = anchors(n, l);
    const std::size_t m = cand.size();
    std::vector<std::set<Point>> pts;
    for (const auto& [x, y] : cand)
        pts.push_back(points(x, y, l));
    std::vector<std::vector<bool>> clash(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            clash[i][j] = i != j && !disjoint(pts[i], pts[j]);

    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const int size = __builtin_popcountll(mask);
        if (size <= best)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            if ((mask >> i) & 1U)
                for (std::size_t j = i + 1; j < m && ok; ++j)
                    if (((mask >> j) & 1U) && clash[i][j])
                        ok = false;
        if (ok)
            best = size;
    }
    return best;
}

/// Lattice point count on each line x - y = c, by scanning the lattice.
inline std::map<int, int> line_counts(int n)
{
    std::map<int, int> counts;
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= n; ++y)
            ++counts[x - y];
    return counts;
}

/// Best number of disjoint (l+1)-vertex blocks in a k-vertex path, by
/// trying every start position for the first block.
inline int path_blocks(int k, int l)
{
    int best = 0;
    for (int start = 0; start + l + 1 <= k; ++start)
        best = std::max(best, 1 + path_blocks(k - start - l - 1, l));
    return best;
}

} // namespace brute
