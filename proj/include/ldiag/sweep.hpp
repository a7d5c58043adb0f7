#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ldiag {

struct SweepRow {
    int n;
    int l;
    std::int64_t lower;
    std::int64_t upper;
    std::optional<std::int64_t> closed;
    std::optional<std::int64_t> exact;
    bool divisible;
    bool agrees; // every non-null value equal
};

SweepRow sweep_row(int n, int l);

/// Rows for l = 1 .. l_max (outer) and n = l .. n_max (inner). The exact
/// column comes from the per-line solver, which is always feasible.
std::vector<SweepRow> sweep(int l_max, int n_max);

inline constexpr const char* sweep_csv_header = "n,l,lower,upper,closed,exact,divisible,agrees";

/// Header line then one line per row; null cells are empty strings.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

} // namespace ldiag
