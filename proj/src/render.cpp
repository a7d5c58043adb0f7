#include "ldiag/render.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ldiag {

namespace {

void require_valid(const Arrangement& a)
{
    const Verdict v = validate(a);
    if (!v.out_of_bounds.empty())
        throw PreconditionError("cannot render: a diagonal lies outside the array");
    if (!v.conflicts.empty())
        throw PreconditionError("cannot render: arrangement has " +
                                std::to_string(v.conflicts.size()) + " intersecting pair(s)");
}

// Colour names, hex codes and rgb(...) forms; nothing that can close an
// attribute.
bool plain_colour(const std::string& c)
{
    return !c.empty() && std::all_of(c.begin(), c.end(), [](unsigned char ch) {
        return std::isalnum(ch) || ch == '#' || ch == '(' || ch == ')' || ch == ',' || ch == '.' ||
               ch == ' ' || ch == '%';
    });
}

} // namespace

std::string render_ascii(const Arrangement& a)
{
    require_valid(a);
    const int n = a.grid.n();
    const int width = 2 * n + 1;
    std::vector<std::string> rows(static_cast<std::size_t>(width), std::string(width, ' '));

    // Text row r = 2 (n - y) holds lattice row y.
    for (int r = 0; r < width; ++r) {
        for (int c = 0; c < width; ++c) {
            const bool point_row = r % 2 == 0;
            const bool point_col = c % 2 == 0;
            if (point_row && point_col)
                rows[r][c] = '+';
            else if (point_row)
                rows[r][c] = '-';
            else if (point_col)
                rows[r][c] = '|';
        }
    }
    for (const auto& d : a.diagonals) {
        for (const auto& u : unit_diagonals(d)) {
            const int r = 2 * (n - u.anchor.y) - 1;
            const int c = 2 * u.anchor.x + 1;
            rows[r][c] = '/';
        }
    }

    std::string out;
    out.reserve(static_cast<std::size_t>(width) * static_cast<std::size_t>(width + 1));
    for (const auto& row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

std::string render_svg(const Arrangement& a, const RenderStyle& style)
{
    if (style.cell_px < 8)
        throw PreconditionError("render_svg: cell_px must be at least 8");
    if (!plain_colour(style.grid_stroke) || !plain_colour(style.diagonal_stroke))
        throw PreconditionError("render_svg: stroke colours must be plain colour names or codes");
    require_valid(a);

    const int n = a.grid.n();
    const int cell = style.cell_px;
    const int side = n * cell;
    const int margin = cell / 2;
    const int total = side + 2 * margin;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << total
       << "\" height=\"" << total << "\" viewBox=\"" << -margin << ' ' << -margin << ' ' << total
       << ' ' << total << "\">\n"
       << "  <rect class=\"background\" x=\"" << -margin << "\" y=\"" << -margin << "\" width=\""
       << total << "\" height=\"" << total << "\" fill=\"white\"/>\n";

    for (int i = 0; i <= n; ++i)
        os << "  <line class=\"grid\" x1=\"" << i * cell << "\" y1=\"0\" x2=\"" << i * cell
           << "\" y2=\"" << side << "\" stroke=\"" << style.grid_stroke
           << "\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= n; ++i)
        os << "  <line class=\"grid\" x1=\"0\" y1=\"" << i * cell << "\" x2=\"" << side
           << "\" y2=\"" << i * cell << "\" stroke=\"" << style.grid_stroke
           << "\" stroke-width=\"1\"/>\n";

    for (const auto& d : a.diagonals) {
        const int x1 = d.anchor.x * cell;
        const int y1 = (n - d.anchor.y) * cell;
        const int x2 = (d.anchor.x + d.length) * cell;
        const int y2 = (n - d.anchor.y - d.length) * cell;
        os << "  <line class=\"diagonal\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
           << "\" y2=\"" << y2 << "\" stroke=\"" << style.diagonal_stroke
           << "\" stroke-width=\"3\"/>\n";
    }

    if (style.show_anchors) {
        const int dot = cell / 8;
        for (const auto& d : a.diagonals)
            os << "  <rect class=\"anchor\" x=\"" << d.anchor.x * cell - dot / 2 << "\" y=\""
               << (n - d.anchor.y) * cell - dot / 2 << "\" width=\"" << dot << "\" height=\""
               << dot << "\" fill=\"" << style.diagonal_stroke << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace ldiag
