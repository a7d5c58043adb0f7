#include "brute_force.hpp"

#include "ldiag/bounds.hpp"
#include "ldiag/construction.hpp"
#include "ldiag/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ldiag;

TEST_CASE("path_dp")
{
    const auto p7 = path_dp(PathSpec{7}, 2);
    CHECK(p7.count == 2);
    CHECK(p7.starts == std::vector<int>{0, 3});
    CHECK(path_dp(PathSpec{3}, 2).count == 1);
    CHECK(path_dp(PathSpec{1}, 1).count == 0);
    CHECK(path_dp(PathSpec{1}, 1).starts.empty());
}

TEST_CASE("path_dp equals floor(k/(l+1)) and its blocks are disjoint")
{
    for (int l = 1; l <= 10; ++l)
        for (int k = 1; k <= 60; ++k) {
            const auto p = path_dp(PathSpec{k}, l);
            CHECK(p.count == m_l_floor(PathSpec{k}, l));
            REQUIRE(static_cast<std::int64_t>(p.starts.size()) == p.count);
            for (std::size_t i = 0; i < p.starts.size(); ++i) {
                CHECK(p.starts[i] >= 0);
                CHECK(p.starts[i] + l < k);
                if (i > 0)
                    CHECK(p.starts[i] > p.starts[i - 1] + l);
            }
        }
}

TEST_CASE("conflict graph")
{
    const ConflictGraph g(GridSpec(3, 2));
    CHECK(g.size() == 4);
    // only (0,0)-(1,1) share a line
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(3, 0));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK_FALSE(g.adjacent(1, 2));

    const ConflictGraph h(GridSpec(5, 1));
    CHECK(h.size() == 25);
    for (std::size_t u = 0; u < h.size(); ++u) {
        CHECK_FALSE(h.adjacent(u, u));
        for (std::size_t v = 0; v < h.size(); ++v)
            CHECK(h.adjacent(u, v) == (u != v && intersects(h.vertices()[u], h.vertices()[v])));
    }

    CHECK_THROWS_AS(ConflictGraph(GridSpec(3, 2), {{{2, 2}, 2}}), PreconditionError);
}

TEST_CASE("exact_per_line")
{
    CHECK(exact_per_line(GridSpec(6, 2)).value == 12);
    CHECK(exact_per_line(GridSpec(2, 1)).value == 3);
    CHECK(exact_per_line(GridSpec(8, 2)).value == 21);
    CHECK(exact_per_line(GridSpec(2, 3)).value == 0);

    for (int n = 1; n <= 20; ++n)
        for (int l = 1; l <= n; ++l) {
            const auto r = exact_per_line(GridSpec(n, l));
            CHECK(r.value == upper_bound_sum(n, l));
            CHECK(static_cast<std::int64_t>(r.witness.diagonals.size()) == r.value);
            CHECK(validate(r.witness).ok());
        }
}

TEST_CASE("exact_mis small instances")
{
    const auto r21 = exact_mis(GridSpec(2, 1));
    CHECK(r21.value == 3);
    CHECK(r21.optimal);
    CHECK(validate(r21.witness).ok());

    CHECK(exact_mis(GridSpec(3, 2)).value == 3);
    CHECK(exact_mis(GridSpec(6, 1)).value == 21);
    CHECK(exact_mis(GridSpec(6, 1)).value == d1_exact(6));
    CHECK(exact_mis(GridSpec(4, 3)).value == 3);
    CHECK(exact_mis(GridSpec(2, 3)).value == 0);
}

TEST_CASE("exact_mis agrees with subset enumeration")
{
    // frozen from the subset search in brute_force.hpp
    struct Case {
        int n, l, value;
    };
    for (const Case c : {Case{2, 1, 3}, Case{3, 1, 6}, Case{4, 1, 10}, Case{3, 2, 3}, Case{4, 2, 5},
                         Case{4, 3, 3}, Case{5, 4, 3}, Case{2, 2, 1}, Case{5, 2, 8}}) {
        CAPTURE(c.n);
        CAPTURE(c.l);
        CHECK(brute::max_packing(c.n, c.l) == c.value);
        CHECK(exact_mis(GridSpec(c.n, c.l)).value == c.value);
    }
}

TEST_CASE("decomposition is exact: mis = per-line wherever the candidate set is small")
{
    for (int n = 1; n <= 12; ++n)
        for (int l = 1; l <= std::min(n, 4); ++l) {
            const int side = n - l + 1;
            if (side * side > 36)
                continue;
            const GridSpec g(n, l);
            const auto mis = exact_mis(g);
            CAPTURE(n);
            CAPTURE(l);
            REQUIRE(mis.optimal);
            CHECK(mis.value == exact_per_line(g).value);
            CHECK(validate(mis.witness).ok());
            CHECK(l_arrangement_count(g) <= mis.value);
        }
}

TEST_CASE("mis value does not depend on candidate order")
{
    const GridSpec g(4, 1);
    auto order = enumerate_all(g);
    std::mt19937 rng(20240601);
    for (int round = 0; round < 20; ++round) {
        std::shuffle(order.begin(), order.end(), rng);
        const auto r = exact_mis(ConflictGraph(g, order));
        CHECK(r.value == 10);
        CHECK(validate(r.witness).ok());
    }
}

TEST_CASE("node budget exhaustion is flagged")
{
    const auto r = exact_mis(GridSpec(8, 1), 5);
    CHECK_FALSE(r.optimal);
    CHECK(r.nodes >= 5);
    CHECK(validate(r.witness).ok());
    CHECK(static_cast<std::int64_t>(r.witness.diagonals.size()) == r.value);
}

TEST_CASE("cross_validate")
{
    const auto a = cross_validate(GridSpec(4, 1));
    CHECK(a.consistent);
    CHECK(a.values.construction == 10);
    CHECK(a.values.upper == 10);
    CHECK(a.values.per_line == 10);
    CHECK(a.values.mis == 10);
    CHECK(a.values.closed_form == 10);

    const auto b = cross_validate(GridSpec(6, 2));
    CHECK(b.consistent);
    CHECK(b.values.mis == 12);

    const auto c = cross_validate(GridSpec(8, 2));
    CHECK(c.consistent);
    CHECK_FALSE(c.values.divisible);
    CHECK(c.values.mis == 21);
    CHECK(c.values.construction == 21);
    CHECK_FALSE(c.values.closed_form);
}

TEST_CASE("assess reports every broken link")
{
    ChainValues v{12, 12, 12, 12, 12, true, true};
    CHECK(assess(6, 2, v).consistent);

    v.mis = 13;
    auto r = assess(6, 2, v);
    CHECK_FALSE(r.consistent);
    CHECK(r.discrepancies.size() == 2); // vs per_line and vs closed form

    v = {12, 12, 12, 12, 11, true, true};
    r = assess(6, 2, v);
    CHECK_FALSE(r.consistent);
    CHECK(r.discrepancies.size() == 4);

    // a construction below the optimum is fine off the divisible case
    v = {7, 8, 8, std::nullopt, std::nullopt, false, true};
    CHECK(assess(5, 2, v).consistent);

    // non-optimal mis is not compared
    v = {12, 12, 12, 3, 12, true, false};
    CHECK(assess(6, 2, v).consistent);
}
