#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ldiag {

/// Raised when an operation is called outside its domain (bad sizes,
/// diagonals that do not fit, missing divisibility).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An n x n array of unit squares packed with diagonals of length l.
///
/// l > n is a legal instance with no candidate diagonals, so sweeps over
/// (n, l) ranges never need to special-case it.
class GridSpec {
public:
    GridSpec(int n, int l);

    int n() const noexcept { return n_; }
    int l() const noexcept { return l_; }

    /// Number of lattice points on a side, k = n + 1.
    int side_points() const noexcept { return n_ + 1; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    int n_;
    int l_;
};

/// Lattice point with origin at the bottom-left corner, x to the right and
/// y upwards. The top-left matrix index v(i, j) counted from 1 maps as
/// i = n + 1 - y, j = x + 1.
struct LatticePoint {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// A positive-slope diagonal spanning `length` unit squares, keyed by its
/// lower-left endpoint.
struct Diagonal {
    LatticePoint anchor;
    int length = 1;

    bool fits(const GridSpec& grid) const noexcept;

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

/// Orders diagonals by (y, x) of the anchor, then by length.
struct CanonicalOrder {
    bool operator()(const Diagonal& a, const Diagonal& b) const noexcept
    {
        if (a.anchor.y != b.anchor.y)
            return a.anchor.y < b.anchor.y;
        if (a.anchor.x != b.anchor.x)
            return a.anchor.x < b.anchor.x;
        return a.length < b.length;
    }
};

/// Checked constructor: throws PreconditionError unless the diagonal fits.
Diagonal make_diagonal(const GridSpec& grid, int x, int y);

struct Arrangement {
    GridSpec grid;
    std::vector<Diagonal> diagonals;
};

/// Sorts the diagonals by (y, x) in place.
void canonicalize(Arrangement& a);

std::vector<LatticePoint> points_of(const Diagonal& d);
std::vector<Diagonal> unit_diagonals(const Diagonal& d);

/// Two diagonals intersect when any of their unit diagonals share a lattice
/// point or lie in the same unit square.
bool intersects(const Diagonal& a, const Diagonal& b);

/// Every diagonal of length l that fits the grid, row-major by anchor (y, x).
std::vector<Diagonal> enumerate_all(const GridSpec& grid);

/// Index c = x - y of the lattice line carrying the diagonal.
inline int line_of(const Diagonal& d) noexcept { return d.anchor.x - d.anchor.y; }

struct PathLine {
    int offset;   // c = x - y
    int vertices; // k_c = n + 1 - |c|
};

/// The lattice lines x - y = c that hold at least two lattice points,
/// ordered by increasing c. Lines too short for an l-diagonal are kept.
struct PathDecomposition {
    std::vector<PathLine> lines;

    int vertices_on(int offset) const;
    std::int64_t total_vertices() const;
};

PathDecomposition decompose(const GridSpec& grid);

struct OutOfBounds {
    std::size_t index;
    Diagonal diagonal;
};

struct Conflict {
    std::size_t first;
    std::size_t second;
};

/// Outcome of validate(). Out-of-bounds diagonals are reported alone; pair
/// conflicts are only looked for once every diagonal fits.
struct Verdict {
    std::vector<OutOfBounds> out_of_bounds;
    std::vector<Conflict> conflicts;

    bool ok() const noexcept { return out_of_bounds.empty() && conflicts.empty(); }
};

/// Checks an arrangement for fit and pairwise intersections. Conflicts are
/// listed with first < second, sorted.
Verdict validate(const Arrangement& a);

} // namespace ldiag
