#include "ldiag/sweep.hpp"

#include "ldiag/bounds.hpp"
#include "ldiag/oracle.hpp"

#include <ostream>

namespace ldiag {

SweepRow sweep_row(int n, int l)
{
    const BoundsReport b = report(n, l);
    SweepRow row{n, l, b.lower_construction, b.upper_path_sum, b.closed_form,
                 exact_per_line(GridSpec(n, l)).value, b.divisible, true};
    auto same = [&](const std::optional<std::int64_t>& v) { return !v || *v == row.lower; };
    row.agrees = row.upper == row.lower && same(row.closed) && same(row.exact);
    return row;
}

std::vector<SweepRow> sweep(int l_max, int n_max)
{
    if (l_max < 1 || n_max < 1)
        throw PreconditionError("sweep: l_max and n_max must be positive");
    std::vector<SweepRow> rows;
    for (int l = 1; l <= l_max; ++l)
        for (int n = l; n <= n_max; ++n)
            rows.push_back(sweep_row(n, l));
    return rows;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows)
{
    auto cell = [&](const std::optional<std::int64_t>& v) {
        if (v)
            os << *v;
    };
    os << sweep_csv_header << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << r.l << ',' << r.lower << ',' << r.upper << ',';
        cell(r.closed);
        os << ',';
        cell(r.exact);
        os << ',' << (r.divisible ? "true" : "false") << ',' << (r.agrees ? "true" : "false")
           << '\n';
    }
}

} // namespace ldiag
