#pragma once

#include "ldiag/grid.hpp"

#include <cstdint>
#include <vector>

namespace ldiag {

/// One nested L of the construction. Layer i is offset by o = i (l + 1) and
/// works inside the remaining s x s sub-array. The bottom run owns the
/// corner anchor (o, o); the left run starts one row above it.
struct LayerRecord {
    int index;
    int offset;
    int side;
    std::vector<Diagonal> bottom_run; // anchors (x, o), x = o .. n - l
    std::vector<Diagonal> left_run;   // anchors (o, y), y = o + 1 .. n - l
};

struct LArrangementTrace {
    std::vector<LayerRecord> layers;
};

struct ConstructionResult {
    Arrangement arrangement;
    LArrangementTrace trace;
    std::int64_t count = 0;
};

/// Builds the nested-L packing. Layers are added while the remaining side
/// s = n - i (l + 1) is at least l, which also covers n not divisible by
/// l + 1. The arrangement is returned in canonical (y, x) order.
ConstructionResult build_l_arrangement(const GridSpec& grid);

/// Size of the nested-L packing without materialising it.
std::int64_t l_arrangement_count(const GridSpec& grid);

/// (n^2 - n (l - 2)) / (l + 1). Requires (l + 1) | n.
std::int64_t closed_form_L(std::int64_t n, std::int64_t l);

/// Layer-by-layer sum (n - (l - 1)) + (n - l) + sum_{j=1}^{a-1} of
/// (n - j (l + 1) - (l - 1)) + (n - j (l + 1) - l), with a = n / (l + 1).
/// Requires (l + 1) | n.
std::int64_t telescoping_sum_L(std::int64_t n, std::int64_t l);

} // namespace ldiag
