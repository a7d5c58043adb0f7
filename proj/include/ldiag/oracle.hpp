#pragma once

#include "ldiag/bounds.hpp"
#include "ldiag/grid.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ldiag {

/// Candidate diagonals with an edge between every intersecting pair.
/// Adjacency rows are bitsets over vertex indices.
class ConflictGraph {
public:
    /// Vertices in enumerate_all order.
    explicit ConflictGraph(const GridSpec& grid);
    /// Vertices in the given order; every diagonal must fit `grid`.
    ConflictGraph(const GridSpec& grid, std::vector<Diagonal> vertices);

    const GridSpec& grid() const noexcept { return grid_; }
    const std::vector<Diagonal>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t words() const noexcept { return words_; }

    bool adjacent(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;
    const std::uint64_t* row(std::size_t v) const { return &adj_[v * words_]; }

private:
    GridSpec grid_;
    std::vector<Diagonal> vertices_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Maximum packing of (l + 1)-vertex blocks into P_k; `starts` are the
/// 0-based first vertices of the chosen blocks.
struct PathPacking {
    std::int64_t count = 0;
    std::vector<int> starts;
};

/// Left-to-right dynamic program: each vertex is either skipped or opens a
/// block of l + 1 consecutive vertices.
PathPacking path_dp(PathSpec path, int l);

enum class SolveMethod { PerLineDp, Mis };

const char* to_string(SolveMethod m);

struct ExactResult {
    std::int64_t value = 0;
    Arrangement witness;
    SolveMethod method;
    bool optimal = true;
    std::uint64_t nodes = 0;
};

/// Sums path_dp over every lattice line and maps the blocks back to anchors.
ExactResult exact_per_line(const GridSpec& grid);

inline constexpr std::uint64_t default_node_budget = 100'000'000;

/// Maximum independent set of the conflict graph by branch and bound.
///
/// Branches on the vertex of highest remaining degree (lowest index on
/// ties), include-branch first. The bound is the current size plus a greedy
/// clique cover of the remaining candidates. When `budget` nodes are
/// exhausted the best set so far is returned with optimal = false.
ExactResult exact_mis(const ConflictGraph& graph, std::uint64_t budget = default_node_budget);
ExactResult exact_mis(const GridSpec& grid, std::uint64_t budget = default_node_budget);

struct ChainValues {
    std::int64_t construction;
    std::int64_t upper;
    std::int64_t per_line;
    std::optional<std::int64_t> mis;
    std::optional<std::int64_t> closed_form;
    bool divisible;
    bool mis_optimal = true;
};

struct CrossValidation {
    int n;
    int l;
    ChainValues values;
    bool consistent;
    std::vector<std::string> discrepancies;
};

/// Checks mis = per_line = upper >= construction, and equality with the
/// closed form when (l + 1) | n. Discrepancies are data, not exceptions.
CrossValidation assess(int n, int l, const ChainValues& values);

/// Runs every solver on the instance and assesses the chain. With
/// run_mis = false the MIS value is left empty.
CrossValidation cross_validate(const GridSpec& grid, bool run_mis = true,
                               std::uint64_t budget = default_node_budget);

} // namespace ldiag
