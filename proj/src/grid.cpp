#include "ldiag/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ldiag {

GridSpec::GridSpec(int n, int l)
    : n_(n)
    , l_(l)
{
    if (n < 1 || l < 1)
        throw PreconditionError("grid needs n >= 1 and l >= 1, got n=" + std::to_string(n) +
                                " l=" + std::to_string(l));
}

bool Diagonal::fits(const GridSpec& grid) const noexcept
{
    return length == grid.l() && anchor.x >= 0 && anchor.y >= 0 && anchor.x + length <= grid.n() &&
           anchor.y + length <= grid.n();
}

Diagonal make_diagonal(const GridSpec& grid, int x, int y)
{
    Diagonal d{{x, y}, grid.l()};
    if (!d.fits(grid))
        throw PreconditionError("diagonal at (" + std::to_string(x) + "," + std::to_string(y) +
                                ") of length " + std::to_string(grid.l()) +
                                " does not fit an n=" + std::to_string(grid.n()) + " array");
    return d;
}

void canonicalize(Arrangement& a)
{
    std::sort(a.diagonals.begin(), a.diagonals.end(), CanonicalOrder{});
}

std::vector<LatticePoint> points_of(const Diagonal& d)
{
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(d.length) + 1);
    for (int t = 0; t <= d.length; ++t)
        pts.push_back({d.anchor.x + t, d.anchor.y + t});
    return pts;
}

std::vector<Diagonal> unit_diagonals(const Diagonal& d)
{
    std::vector<Diagonal> units;
    units.reserve(static_cast<std::size_t>(d.length));
    for (int t = 0; t < d.length; ++t)
        units.push_back({{d.anchor.x + t, d.anchor.y + t}, 1});
    return units;
}

namespace {

// A positive unit diagonal anchored at (x, y) lives in the unit square whose
// lower-left corner is (x, y) and touches (x, y) and (x+1, y+1).
bool unit_intersects(const Diagonal& a, const Diagonal& b)
{
    if (a.anchor == b.anchor)
        return true; // same unit square
    const LatticePoint a_tip{a.anchor.x + 1, a.anchor.y + 1};
    const LatticePoint b_tip{b.anchor.x + 1, b.anchor.y + 1};
    return a.anchor == b_tip || a_tip == b.anchor || a_tip == b_tip;
}

} // namespace

bool intersects(const Diagonal& a, const Diagonal& b)
{
    const auto ua = unit_diagonals(a);
    const auto ub = unit_diagonals(b);
    for (const auto& u : ua)
        for (const auto& v : ub)
            if (unit_intersects(u, v))
                return true;
    return false;
}

std::vector<Diagonal> enumerate_all(const GridSpec& grid)
{
    std::vector<Diagonal> all;
    const int span = grid.n() - grid.l();
    if (span < 0)
        return all;
    all.reserve(static_cast<std::size_t>(span + 1) * static_cast<std::size_t>(span + 1));
    for (int y = 0; y <= span; ++y)
        for (int x = 0; x <= span; ++x)
            all.push_back({{x, y}, grid.l()});
    return all;
}

int PathDecomposition::vertices_on(int offset) const
{
    auto it = std::lower_bound(lines.begin(), lines.end(), offset,
                               [](const PathLine& p, int c) { return p.offset < c; });
    return it != lines.end() && it->offset == offset ? it->vertices : 0;
}

std::int64_t PathDecomposition::total_vertices() const
{
    std::int64_t total = 0;
    for (const auto& p : lines)
        total += p.vertices;
    return total;
}

PathDecomposition decompose(const GridSpec& grid)
{
    PathDecomposition d;
    const int n = grid.n();
    d.lines.reserve(static_cast<std::size_t>(2 * n - 1));
    for (int c = -(n - 1); c <= n - 1; ++c)
        d.lines.push_back({c, n + 1 - std::abs(c)});
    return d;
}

Verdict validate(const Arrangement& a)
{
    Verdict v;
    for (std::size_t i = 0; i < a.diagonals.size(); ++i)
        if (!a.diagonals[i].fits(a.grid))
            v.out_of_bounds.push_back({i, a.diagonals[i]});
    if (!v.out_of_bounds.empty())
        return v;

    // Distinct lines carry disjoint point sets, so only diagonals sharing a
    // line can conflict. Sweep each line in order of position.
    std::vector<std::size_t> order(a.diagonals.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
        const auto& dp = a.diagonals[p];
        const auto& dq = a.diagonals[q];
        if (line_of(dp) != line_of(dq))
            return line_of(dp) < line_of(dq);
        return dp.anchor.x != dq.anchor.x ? dp.anchor.x < dq.anchor.x : p < q;
    });

    for (std::size_t s = 0; s < order.size(); ++s) {
        const auto& ds = a.diagonals[order[s]];
        const int end = ds.anchor.x + ds.length;
        for (std::size_t t = s + 1; t < order.size(); ++t) {
            const auto& dt = a.diagonals[order[t]];
            if (line_of(dt) != line_of(ds) || dt.anchor.x > end)
                break;
            if (intersects(ds, dt))
                v.conflicts.push_back({std::min(order[s], order[t]), std::max(order[s], order[t])});
        }
    }
    std::sort(v.conflicts.begin(), v.conflicts.end(), [](const Conflict& p, const Conflict& q) {
        return p.first != q.first ? p.first < q.first : p.second < q.second;
    });
    return v;
}

} // namespace ldiag
