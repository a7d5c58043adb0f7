#include "ldiag/construction.hpp"
#include "ldiag/render.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace ldiag;

namespace {

std::size_t count_of(const std::string& s, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("ascii boxes")
{
    CHECK(render_ascii(Arrangement{GridSpec(1, 1), {}}) == "+-+\n| |\n+-+\n");
    CHECK(render_ascii(Arrangement{GridSpec(1, 1), {{{0, 0}, 1}}}) == "+-+\n|/|\n+-+\n");

    // lattice y grows upwards, so the bottom-right cell is on the last text row
    const Arrangement corner{GridSpec(2, 1), {{{1, 0}, 1}}};
    CHECK(render_ascii(corner) == "+-+-+\n| | |\n+-+-+\n| |/|\n+-+-+\n");
}

TEST_CASE("ascii figure has one slash per unit square")
{
    const auto fig = build_l_arrangement(GridSpec(8, 2)).arrangement;
    const std::string art = render_ascii(fig);
    CHECK(std::count(art.begin(), art.end(), '/') == 42);
    CHECK(std::count(art.begin(), art.end(), '\n') == 17);

    for (int n = 1; n <= 10; ++n)
        for (int l = 1; l <= n; ++l) {
            const auto a = build_l_arrangement(GridSpec(n, l)).arrangement;
            const std::string s = render_ascii(a);
            CHECK(static_cast<std::size_t>(std::count(s.begin(), s.end(), '/')) ==
                  static_cast<std::size_t>(l) * a.diagonals.size());
        }
}

TEST_CASE("renderers refuse invalid arrangements")
{
    const Arrangement clash{GridSpec(4, 2), {{{0, 0}, 2}, {{1, 1}, 2}}};
    CHECK_THROWS_AS(render_ascii(clash), PreconditionError);
    CHECK_THROWS_AS(render_svg(clash), PreconditionError);
    const Arrangement outside{GridSpec(2, 2), {{{1, 0}, 2}}};
    CHECK_THROWS_AS(render_svg(outside), PreconditionError);
    RenderStyle tiny;
    tiny.cell_px = 4;
    CHECK_THROWS_AS(render_svg(Arrangement{GridSpec(2, 2), {}}, tiny), PreconditionError);
}

TEST_CASE("svg element counts")
{
    const auto fig = build_l_arrangement(GridSpec(8, 2)).arrangement;
    const std::string svg = render_svg(fig);
    CHECK(count_of(svg, "class=\"grid\"") == 18);
    CHECK(count_of(svg, "class=\"diagonal\"") == 21);
    CHECK(svg == render_svg(fig));

    const std::string empty = render_svg(Arrangement{GridSpec(2, 2), {}});
    CHECK(count_of(empty, "class=\"grid\"") == 6);
    CHECK(count_of(empty, "class=\"diagonal\"") == 0);

    // only line and rect elements besides the root
    for (const auto& s : {svg, empty}) {
        const std::size_t tags = count_of(s, "<") - count_of(s, "</") - count_of(s, "<?");
        CHECK(tags == count_of(s, "<line") + count_of(s, "<rect") + count_of(s, "<svg"));
    }
}

TEST_CASE("svg flips the y axis")
{
    const std::string svg = render_svg(Arrangement{GridSpec(2, 2), {{{0, 0}, 2}}});
    CHECK(svg.find("<line class=\"diagonal\" x1=\"0\" y1=\"80\" x2=\"80\" y2=\"0\"") !=
          std::string::npos);
}

TEST_CASE("svg anchors and style")
{
    RenderStyle style;
    style.show_anchors = true;
    style.cell_px = 20;
    style.diagonal_stroke = "blue";
    const auto a = build_l_arrangement(GridSpec(6, 2)).arrangement;
    const std::string svg = render_svg(a, style);
    CHECK(count_of(svg, "class=\"anchor\"") == a.diagonals.size());
    CHECK(count_of(svg, "stroke=\"blue\"") == a.diagonals.size());
    CHECK(svg.find("width=\"140\"") != std::string::npos); // 6*20 + margin
}

TEST_CASE("svg rejects colours that would break the markup")
{
    RenderStyle style;
    style.grid_stroke = "red\" onload=\"x";
    CHECK_THROWS_AS(render_svg(Arrangement{GridSpec(2, 2), {}}, style), PreconditionError);
    style.grid_stroke = "#33aa00";
    CHECK_NOTHROW(render_svg(Arrangement{GridSpec(2, 2), {}}, style));
}
