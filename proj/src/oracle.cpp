#include "ldiag/oracle.hpp"

#include "ldiag/construction.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace ldiag {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

bool any(const Bits& b)
{
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t lowest(const Bits& b)
{
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w])
            return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
    return b.size() * 64;
}

template <class F>
void for_each_bit(const Bits& b, F&& f)
{
    for (std::size_t w = 0; w < b.size(); ++w)
        for (std::uint64_t word = b[w]; word; word &= word - 1)
            f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
}

class MisSearch {
public:
    MisSearch(const ConflictGraph& g, std::uint64_t budget)
        : g_(g)
        , budget_(budget)
    {}

    void run()
    {
        Bits all(g_.words(), 0);
        for (std::size_t v = 0; v < g_.size(); ++v)
            set_bit(all, v);
        expand(std::move(all));
    }

    const std::vector<std::size_t>& best() const { return best_; }
    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t degree_within(std::size_t v, const Bits& p) const
    {
        const std::uint64_t* row = g_.row(v);
        std::size_t d = 0;
        for (std::size_t w = 0; w < p.size(); ++w)
            d += static_cast<std::size_t>(std::popcount(row[w] & p[w]));
        return d;
    }

    // Greedy partition of p into cliques of the conflict graph; an
    // independent set takes at most one vertex from each.
    std::size_t clique_cover(Bits rest) const
    {
        std::size_t cliques = 0;
        while (any(rest)) {
            const std::size_t u = lowest(rest);
            clear_bit(rest, u);
            Bits cand(rest.size());
            const std::uint64_t* ru = g_.row(u);
            for (std::size_t w = 0; w < rest.size(); ++w)
                cand[w] = rest[w] & ru[w];
            while (any(cand)) {
                const std::size_t v = lowest(cand);
                clear_bit(rest, v);
                const std::uint64_t* rv = g_.row(v);
                for (std::size_t w = 0; w < cand.size(); ++w)
                    cand[w] &= rv[w];
            }
            ++cliques;
        }
        return cliques;
    }

    void record()
    {
        if (current_.size() > best_.size())
            best_ = current_;
    }

    void expand(Bits p)
    {
        if (aborted_)
            return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        if (!any(p)) {
            record();
            return;
        }
        if (current_.size() + clique_cover(p) <= best_.size())
            return;

        std::size_t pick = 0;
        std::size_t pick_degree = 0;
        bool found = false;
        for_each_bit(p, [&](std::size_t v) {
            const std::size_t d = degree_within(v, p);
            if (!found || d > pick_degree) {
                pick = v;
                pick_degree = d;
                found = true;
            }
        });

        if (pick_degree == 0) {
            // Everything left is isolated and belongs to the set.
            const std::size_t mark = current_.size();
            for_each_bit(p, [&](std::size_t v) { current_.push_back(v); });
            record();
            current_.resize(mark);
            return;
        }

        Bits with = p;
        clear_bit(with, pick);
        const std::uint64_t* row = g_.row(pick);
        for (std::size_t w = 0; w < with.size(); ++w)
            with[w] &= ~row[w];
        current_.push_back(pick);
        expand(std::move(with));
        current_.pop_back();

        clear_bit(p, pick);
        expand(std::move(p));
    }

    const ConflictGraph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

} // namespace

ConflictGraph::ConflictGraph(const GridSpec& grid)
    : ConflictGraph(grid, enumerate_all(grid))
{}

ConflictGraph::ConflictGraph(const GridSpec& grid, std::vector<Diagonal> vertices)
    : grid_(grid)
    , vertices_(std::move(vertices))
    , words_((vertices_.size() + 63) / 64)
    , adj_(vertices_.size() * words_, 0)
{
    for (const auto& d : vertices_)
        if (!d.fits(grid_))
            throw PreconditionError("conflict graph vertex does not fit the grid");
    for (std::size_t u = 0; u < vertices_.size(); ++u) {
        for (std::size_t v = u + 1; v < vertices_.size(); ++v) {
            if (!intersects(vertices_[u], vertices_[v]))
                continue;
            adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
            adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        }
    }
}

bool ConflictGraph::adjacent(std::size_t u, std::size_t v) const
{
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t ConflictGraph::degree(std::size_t v) const
{
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w)
        d += static_cast<std::size_t>(std::popcount(adj_[v * words_ + w]));
    return d;
}

std::size_t ConflictGraph::edge_count() const
{
    std::size_t twice = 0;
    for (std::size_t v = 0; v < size(); ++v)
        twice += degree(v);
    return twice / 2;
}

PathPacking path_dp(PathSpec path, int l)
{
    if (l < 1)
        throw PreconditionError("path_dp: l must be positive");
    const int k = path.k;
    const int block = l + 1;
    std::vector<std::int64_t> best(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 1; i <= k; ++i) {
        best[i] = best[i - 1];
        if (i >= block)
            best[i] = std::max(best[i], best[i - block] + 1);
    }

    PathPacking packing{best[k], {}};
    for (int i = k; i > 0;) {
        if (best[i] == best[i - 1]) {
            --i;
        } else {
            packing.starts.push_back(i - block);
            i -= block;
        }
    }
    std::reverse(packing.starts.begin(), packing.starts.end());
    return packing;
}

const char* to_string(SolveMethod m)
{
    switch (m) {
    case SolveMethod::PerLineDp:
        return "lines";
    case SolveMethod::Mis:
        return "mis";
    }
    return "unknown";
}

ExactResult exact_per_line(const GridSpec& grid)
{
    ExactResult r{0, Arrangement{grid, {}}, SolveMethod::PerLineDp, true, 0};
    for (const auto& line : decompose(grid).lines) {
        const PathPacking packing = path_dp(PathSpec{line.vertices}, grid.l());
        const int x0 = std::max(line.offset, 0);
        const int y0 = std::max(-line.offset, 0);
        for (int s : packing.starts)
            r.witness.diagonals.push_back({{x0 + s, y0 + s}, grid.l()});
        r.value += packing.count;
        ++r.nodes;
    }
    canonicalize(r.witness);
    return r;
}

ExactResult exact_mis(const ConflictGraph& graph, std::uint64_t budget)
{
    MisSearch search(graph, budget);
    search.run();
    ExactResult r{static_cast<std::int64_t>(search.best().size()), Arrangement{graph.grid(), {}},
                  SolveMethod::Mis, !search.aborted(), search.nodes()};
    for (std::size_t v : search.best())
        r.witness.diagonals.push_back(graph.vertices()[v]);
    canonicalize(r.witness);
    return r;
}

ExactResult exact_mis(const GridSpec& grid, std::uint64_t budget)
{
    return exact_mis(ConflictGraph(grid), budget);
}

CrossValidation assess(int n, int l, const ChainValues& v)
{
    CrossValidation cv{n, l, v, true, {}};
    auto note = [&](std::string msg) { cv.discrepancies.push_back(std::move(msg)); };
    auto str = [](std::int64_t x) { return std::to_string(x); };

    if (v.mis && v.mis_optimal && *v.mis != v.per_line)
        note("mis " + str(*v.mis) + " != per_line " + str(v.per_line));
    if (v.per_line != v.upper)
        note("per_line " + str(v.per_line) + " != upper " + str(v.upper));
    if (v.construction > v.per_line)
        note("construction " + str(v.construction) + " > per_line " + str(v.per_line));
    if (v.construction > v.upper)
        note("construction " + str(v.construction) + " > upper " + str(v.upper));
    if (v.divisible) {
        if (!v.closed_form) {
            note("closed form missing for a divisible instance");
        } else {
            const std::int64_t c = *v.closed_form;
            if (v.construction != c)
                note("construction " + str(v.construction) + " != closed_form " + str(c));
            if (v.upper != c)
                note("upper " + str(v.upper) + " != closed_form " + str(c));
            if (v.per_line != c)
                note("per_line " + str(v.per_line) + " != closed_form " + str(c));
            if (v.mis && v.mis_optimal && *v.mis != c)
                note("mis " + str(*v.mis) + " != closed_form " + str(c));
        }
    }
    cv.consistent = cv.discrepancies.empty();
    return cv;
}

CrossValidation cross_validate(const GridSpec& grid, bool run_mis, std::uint64_t budget)
{
    const BoundsReport b = report(grid.n(), grid.l());
    ChainValues v{b.lower_construction, b.upper_path_sum, exact_per_line(grid).value,
                  std::nullopt, b.closed_form, b.divisible, true};
    if (run_mis) {
        const ExactResult mis = exact_mis(grid, budget);
        v.mis = mis.value;
        v.mis_optimal = mis.optimal;
    }
    return assess(grid.n(), grid.l(), v);
}

} // namespace ldiag
