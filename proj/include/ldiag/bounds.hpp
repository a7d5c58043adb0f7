#pragma once

#include "ldiag/grid.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace ldiag {

class DivisibilityError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Throws DivisibilityError naming `what` unless divisor | value (and both
/// are positive).
void require_divisible(std::int64_t value, std::int64_t divisor, std::string_view what);

/// A path graph on k vertices.
struct PathSpec {
    int k;

    explicit PathSpec(int vertices);
};

/// Most vertex-disjoint (l + 1)-vertex subpaths of P_k: floor(k / (l + 1)).
std::int64_t m_l_floor(PathSpec path, int l);

/// floor((n+1)/(l+1)) + 2 sum_{j=2}^{n} floor(j/(l+1)): the subpath bound
/// summed over every lattice line of the array.
std::int64_t upper_bound_sum(int n, int l);

/// (n^2 - n (l - 2)) / (l + 1). Requires (l + 1) | n.
std::int64_t closed_form_D(std::int64_t n, std::int64_t l);

/// (n^2 + n) / 2. Requires n even.
std::int64_t d1_exact(std::int64_t n);

/// Exact non-negative fraction; never reduced, so intermediates read as
/// written (e.g. 11/3).
struct Fraction {
    std::int64_t num;
    std::int64_t den;

    std::int64_t floor() const { return num / den; }

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// An intermediate bound M <= fraction together with the integer bound it
/// collapses to under the divisibility hypothesis.
struct RationalBound {
    Fraction intermediate;
    std::int64_t final_value;
};

/// Length-2 bound: M <= (n^2 + 2)/3, floored to n^2/3. Requires 3 | n.
/// Throws std::logic_error if the floor identity fails.
RationalBound d2_upper(std::int64_t n);

/// Length-3 bound: M <= (n^2 - n + 1)/4, floored to (n^2 - n)/4.
/// Requires 4 | n. Throws std::logic_error if the floor identity fails.
RationalBound d3_upper(std::int64_t n);

struct BoundsReport {
    int n;
    int l;
    std::int64_t lower_construction;
    std::int64_t upper_path_sum;
    std::optional<std::int64_t> closed_form; // present iff (l + 1) | n
    bool divisible;
};

/// Lower bound from the nested-L construction, upper bound from the path
/// sum, and the closed form when it applies. Requires 1 <= l <= n.
BoundsReport report(int n, int l);

} // namespace ldiag
