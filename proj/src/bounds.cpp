#include "ldiag/bounds.hpp"

#include "ldiag/construction.hpp"

#include <stdexcept>
#include <string>

namespace ldiag {

void require_divisible(std::int64_t value, std::int64_t divisor, std::string_view what)
{
    if (value < 1 || divisor < 1 || value % divisor != 0)
        throw DivisibilityError(std::string(what) + ": requires " + std::to_string(divisor) +
                                " | " + std::to_string(value));
}

PathSpec::PathSpec(int vertices)
    : k(vertices)
{
    if (vertices < 1)
        throw PreconditionError("path needs at least one vertex");
}

std::int64_t m_l_floor(PathSpec path, int l)
{
    if (l < 1)
        throw PreconditionError("m_l_floor: l must be positive");
    return path.k / (l + 1);
}

std::int64_t upper_bound_sum(int n, int l)
{
    if (l < 1 || n < l)
        throw PreconditionError("upper_bound_sum: requires 1 <= l <= n");
    std::int64_t sum = m_l_floor(PathSpec{n + 1}, l);
    for (int j = 2; j <= n; ++j)
        sum += 2 * m_l_floor(PathSpec{j}, l);
    return sum;
}

std::int64_t closed_form_D(std::int64_t n, std::int64_t l)
{
    if (l < 1)
        throw PreconditionError("closed_form_D: l must be positive");
    require_divisible(n, l + 1, "closed_form_D");
    return (n * n - n * (l - 2)) / (l + 1);
}

std::int64_t d1_exact(std::int64_t n)
{
    require_divisible(n, 2, "d1_exact");
    return (n * n + n) / 2;
}

RationalBound d2_upper(std::int64_t n)
{
    require_divisible(n, 3, "d2_upper");
    RationalBound b{{n * n + 2, 3}, n * n / 3};
    if (b.intermediate.floor() != b.final_value)
        throw std::logic_error("d2_upper: floor((n^2+2)/3) != n^2/3 at n=" + std::to_string(n));
    return b;
}

RationalBound d3_upper(std::int64_t n)
{
    require_divisible(n, 4, "d3_upper");
    RationalBound b{{n * n - n + 1, 4}, (n * n - n) / 4};
    if (b.intermediate.floor() != b.final_value)
        throw std::logic_error("d3_upper: floor((n^2-n+1)/4) != (n^2-n)/4 at n=" +
                               std::to_string(n));
    return b;
}

BoundsReport report(int n, int l)
{
    const GridSpec grid(n, l);
    if (l > n)
        throw PreconditionError("report: requires l <= n");
    BoundsReport r{n, l, l_arrangement_count(grid), upper_bound_sum(n, l), std::nullopt,
                   n % (l + 1) == 0};
    if (r.divisible)
        r.closed_form = closed_form_D(n, l);
    if (r.lower_construction > r.upper_path_sum)
        throw std::logic_error("report: construction exceeds the path-sum bound at n=" +
                               std::to_string(n) + " l=" + std::to_string(l));
    return r;
}

} // namespace ldiag
