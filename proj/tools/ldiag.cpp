// Command-line driver: build, bounds, exact, sweep, verify.
//
// Exit codes: 0 success, 2 usage, 3 node budget exhausted, 4 discrepancy.

#include "ldiag/bounds.hpp"
#include "ldiag/construction.hpp"
#include "ldiag/io.hpp"
#include "ldiag/oracle.hpp"
#include "ldiag/render.hpp"
#include "ldiag/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;
constexpr int exit_discrepancy = 4;

constexpr int max_build_n = 10000;
constexpr long long mis_candidate_limit = 100;

struct Options {
    int n = 0;
    int l = 0;
    std::string format = "json";
    std::string out;
    int cell_px = 40;
    bool anchors = false;
    std::string method = "lines";
    std::uint64_t budget = ldiag::default_node_budget;
    bool force = false;
    int l_max = 0;
    int n_max = 0;
    std::string csv;
    std::string log = "discrepancies.jsonl";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_instance(const Options& o)
{
    if (o.l < 1 || o.n < o.l)
        throw UsageError("need 1 <= l <= n");
}

void check_mis_size(const Options& o)
{
    const long long side = o.n - o.l + 1;
    if (side * side > mis_candidate_limit && !o.force)
        throw UsageError("MIS over " + std::to_string(side * side) +
                         " candidates refused (limit 100); pass --force to run anyway");
}

// Writes to --out when given, else stdout.
void emit(const Options& o, const std::function<void(std::ostream&)>& write)
{
    if (o.out.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + o.out);
    write(f);
    if (!f)
        throw UsageError("write to " + o.out + " failed");
}

void emit(const Options& o, const std::string& text)
{
    emit(o, [&](std::ostream& os) { os << text; });
}

int cmd_build(const Options& o)
{
    check_instance(o);
    if (o.n > max_build_n)
        throw UsageError("build supports n <= " + std::to_string(max_build_n));
    const ldiag::GridSpec grid(o.n, o.l);
    const auto built = ldiag::build_l_arrangement(grid);
    const bool valid = ldiag::validate(built.arrangement).ok();

    if (o.format == "json") {
        std::ostringstream head;
        head << "{\"schema\":" << ldiag::arrangement_schema_version << ",\"n\":" << o.n
             << ",\"l\":" << o.l << ",\"count\":" << built.count
             << ",\"valid\":" << (valid ? "true" : "false")
             << ",\"divisible\":" << (o.n % (o.l + 1) == 0 ? "true" : "false")
             << ",\"diagonals\":";
        emit(o, [&](std::ostream& os) {
            os << head.str();
            ldiag::write_anchors_json(os, built.arrangement);
            os << "}\n";
        });
    } else if (!valid) {
        std::cerr << "construction failed validation\n";
    } else if (o.format == "ascii") {
        emit(o, ldiag::render_ascii(built.arrangement));
    } else {
        ldiag::RenderStyle style;
        style.cell_px = o.cell_px;
        style.show_anchors = o.anchors;
        emit(o, ldiag::render_svg(built.arrangement, style));
    }
    if (o.format != "json")
        std::cerr << "count " << built.count << (valid ? " valid" : " INVALID") << '\n';
    return valid ? exit_ok : 1;
}

int cmd_bounds(const Options& o)
{
    check_instance(o);
    emit(o, ldiag::bounds_to_json(ldiag::report(o.n, o.l)).dump() + "\n");
    return exit_ok;
}

int cmd_exact(const Options& o)
{
    check_instance(o);
    const ldiag::GridSpec grid(o.n, o.l);
    if (o.method == "mis")
        check_mis_size(o);
    const ldiag::ExactResult r =
        o.method == "mis" ? ldiag::exact_mis(grid, o.budget) : ldiag::exact_per_line(grid);
    emit(o, ldiag::exact_to_json(r).dump() + "\n");
    if (!r.optimal) {
        std::cerr << "node budget exhausted; value is a lower bound\n";
        return exit_budget;
    }
    return exit_ok;
}

int cmd_sweep(const Options& o)
{
    const auto rows = ldiag::sweep(o.l_max, o.n_max);
    if (o.csv == "-") {
        ldiag::write_csv(std::cout, rows);
        return exit_ok;
    }
    std::ofstream f(o.csv, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + o.csv);
    ldiag::write_csv(f, rows);
    if (!f)
        throw UsageError("write to " + o.csv + " failed");
    return exit_ok;
}

int cmd_verify(const Options& o)
{
    check_instance(o);
    check_mis_size(o);
    const auto cv = ldiag::cross_validate(ldiag::GridSpec(o.n, o.l), true, o.budget);
    const auto j = ldiag::cross_validation_to_json(cv);

    auto show = [](const std::optional<std::int64_t>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    std::cout << "n=" << o.n << " l=" << o.l << (cv.values.divisible ? " divisible" : "")
              << "\n  construction " << cv.values.construction << "\n  upper        "
              << cv.values.upper << "\n  per_line     " << cv.values.per_line
              << "\n  mis          " << show(cv.values.mis)
              << (cv.values.mis_optimal ? "" : " (budget exhausted)") << "\n  closed_form  "
              << show(cv.values.closed_form) << '\n';

    if (!cv.values.mis_optimal) {
        std::cout << "INCOMPLETE\n";
        return exit_budget;
    }
    if (cv.consistent) {
        std::cout << "OK\n";
        return exit_ok;
    }
    std::cout << "DISCREPANCY\n" << j.dump(2) << '\n';
    if (!o.log.empty()) {
        std::ofstream log(o.log, std::ios::app);
        if (log)
            log << j.dump() << '\n';
        else
            std::cerr << "cannot append to " << o.log << '\n';
    }
    return exit_discrepancy;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Packings of positive-slope l-diagonals in n x n lattice arrays"};
    app.require_subcommand(1);
    Options o;

    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "array side")->required();
        sub->add_option("--l", o.l, "diagonal length")->required();
    };

    auto* build = app.add_subcommand("build", "nested-L construction as JSON, ASCII or SVG");
    add_instance(build);
    build->add_option("--format", o.format)->check(CLI::IsMember({"json", "ascii", "svg"}));
    build->add_option("--out", o.out, "output file (default stdout)");
    build->add_option("--cell", o.cell_px, "SVG unit-square size in px")->check(CLI::Range(8, 1000));
    build->add_flag("--anchors", o.anchors, "mark diagonal anchors in SVG output");

    auto* bounds = app.add_subcommand("bounds", "lower/upper/closed-form report as JSON");
    add_instance(bounds);
    bounds->add_option("--out", o.out);

    auto* exact = app.add_subcommand("exact", "exact maximum with a witness packing");
    add_instance(exact);
    exact->add_option("--method", o.method)->check(CLI::IsMember({"lines", "mis"}));
    exact->add_option("--budget", o.budget, "MIS node budget");
    exact->add_flag("--force", o.force, "allow MIS on more than 100 candidates");
    exact->add_option("--out", o.out);

    auto* sweep = app.add_subcommand("sweep", "CSV table over l = 1..l-max, n = l..n-max");
    sweep->add_option("--l-max", o.l_max)->required()->check(CLI::Range(1, 1000));
    sweep->add_option("--n-max", o.n_max)->required()->check(CLI::Range(1, 5000));
    sweep->add_option("--csv", o.csv, "output path, '-' for stdout")->required();

    auto* verify = app.add_subcommand("verify", "cross-check every solver against the formulas");
    add_instance(verify);
    verify->add_option("--budget", o.budget, "MIS node budget");
    verify->add_flag("--force", o.force, "allow MIS on more than 100 candidates");
    verify->add_option("--log", o.log, "discrepancy log (JSON lines, appended)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (build->parsed())
            return cmd_build(o);
        if (bounds->parsed())
            return cmd_bounds(o);
        if (exact->parsed())
            return cmd_exact(o);
        if (sweep->parsed())
            return cmd_sweep(o);
        return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ldiag::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
