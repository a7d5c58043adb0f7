#include "ldiag/construction.hpp"

#include "ldiag/bounds.hpp"

#include <algorithm>

namespace ldiag {

ConstructionResult build_l_arrangement(const GridSpec& grid)
{
    const int n = grid.n();
    const int l = grid.l();
    ConstructionResult result{Arrangement{grid, {}}, {}, 0};

    for (int i = 0;; ++i) {
        const int o = i * (l + 1);
        const int s = n - o;
        if (s < l)
            break;
        LayerRecord layer{i, o, s, {}, {}};
        layer.bottom_run.reserve(static_cast<std::size_t>(s - l + 1));
        for (int x = o; x <= n - l; ++x)
            layer.bottom_run.push_back({{x, o}, l});
        layer.left_run.reserve(static_cast<std::size_t>(s - l));
        for (int y = o + 1; y <= n - l; ++y)
            layer.left_run.push_back({{o, y}, l});
        result.count += static_cast<std::int64_t>(layer.bottom_run.size() + layer.left_run.size());
        result.trace.layers.push_back(std::move(layer));
    }

    auto& diagonals = result.arrangement.diagonals;
    diagonals.reserve(static_cast<std::size_t>(result.count));
    for (const auto& layer : result.trace.layers) {
        diagonals.insert(diagonals.end(), layer.bottom_run.begin(), layer.bottom_run.end());
        diagonals.insert(diagonals.end(), layer.left_run.begin(), layer.left_run.end());
    }
    canonicalize(result.arrangement);
    return result;
}

std::int64_t l_arrangement_count(const GridSpec& grid)
{
    const std::int64_t n = grid.n();
    const std::int64_t l = grid.l();
    std::int64_t count = 0;
    for (std::int64_t s = n; s >= l; s -= l + 1)
        count += (s - l + 1) + (s - l);
    return count;
}

std::int64_t closed_form_L(std::int64_t n, std::int64_t l)
{
    require_divisible(n, l + 1, "closed_form_L");
    return (n * n - n * (l - 2)) / (l + 1);
}

std::int64_t telescoping_sum_L(std::int64_t n, std::int64_t l)
{
    require_divisible(n, l + 1, "telescoping_sum_L");
    const std::int64_t a = n / (l + 1);
    std::int64_t sum = (n - (l - 1)) + (n - l);
    for (std::int64_t j = 1; j <= a - 1; ++j)
        sum += (n - j * (l + 1) - (l - 1)) + (n - j * (l + 1) - l);
    return sum;
}

} // namespace ldiag
