#include "ldiag/io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ldiag {

namespace {

nlohmann::ordered_json anchors_json(const Arrangement& a)
{
    Arrangement sorted = a;
    canonicalize(sorted);
    auto list = nlohmann::ordered_json::array();
    for (const auto& d : sorted.diagonals)
        list.push_back({{"x", d.anchor.x}, {"y", d.anchor.y}});
    return list;
}

template <class T>
nlohmann::ordered_json nullable(const std::optional<T>& v)
{
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace

nlohmann::ordered_json arrangement_to_json(const Arrangement& a)
{
    nlohmann::ordered_json j;
    j["schema"] = arrangement_schema_version;
    j["n"] = a.grid.n();
    j["l"] = a.grid.l();
    j["diagonals"] = anchors_json(a);
    return j;
}

Arrangement arrangement_from_json(const nlohmann::ordered_json& j)
{
    try {
        if (!j.is_object())
            throw PreconditionError("arrangement JSON must be an object");
        const int schema = j.at("schema").get<int>();
        if (schema != arrangement_schema_version)
            throw PreconditionError("unsupported arrangement schema " + std::to_string(schema));
        Arrangement a{GridSpec(j.at("n").get<int>(), j.at("l").get<int>()), {}};
        if (j.contains("diagonals")) {
            for (const auto& d : j.at("diagonals"))
                a.diagonals.push_back({{d.at("x").get<int>(), d.at("y").get<int>()}, a.grid.l()});
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed arrangement JSON: ") + e.what());
    }
}

void write_anchors_json(std::ostream& os, const Arrangement& a)
{
    const std::vector<Diagonal>* list = &a.diagonals;
    std::vector<Diagonal> sorted;
    if (!std::is_sorted(list->begin(), list->end(), CanonicalOrder{})) {
        sorted = a.diagonals;
        std::sort(sorted.begin(), sorted.end(), CanonicalOrder{});
        list = &sorted;
    }
    os << '[';
    bool first = true;
    for (const auto& d : *list) {
        if (!first)
            os << ',';
        first = false;
        os << "{\"x\":" << d.anchor.x << ",\"y\":" << d.anchor.y << '}';
    }
    os << ']';
}

void write_arrangement_json(std::ostream& os, const Arrangement& a)
{
    os << "{\"schema\":" << arrangement_schema_version << ",\"n\":" << a.grid.n()
       << ",\"l\":" << a.grid.l() << ",\"diagonals\":";
    write_anchors_json(os, a);
    os << '}';
}

std::string dump_arrangement(const Arrangement& a)
{
    std::ostringstream os;
    write_arrangement_json(os, a);
    return os.str();
}

nlohmann::ordered_json bounds_to_json(const BoundsReport& r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["l"] = r.l;
    j["lower"] = r.lower_construction;
    j["upper"] = r.upper_path_sum;
    j["closed"] = nullable(r.closed_form);
    j["divisible"] = r.divisible;
    return j;
}

nlohmann::ordered_json exact_to_json(const ExactResult& r)
{
    nlohmann::ordered_json j;
    j["n"] = r.witness.grid.n();
    j["l"] = r.witness.grid.l();
    j["method"] = to_string(r.method);
    j["value"] = r.value;
    j["optimal"] = r.optimal;
    j["nodes"] = r.nodes;
    j["diagonals"] = anchors_json(r.witness);
    return j;
}

nlohmann::ordered_json cross_validation_to_json(const CrossValidation& cv)
{
    nlohmann::ordered_json j;
    j["n"] = cv.n;
    j["l"] = cv.l;
    j["construction"] = cv.values.construction;
    j["upper"] = cv.values.upper;
    j["per_line"] = cv.values.per_line;
    j["mis"] = nullable(cv.values.mis);
    j["mis_optimal"] = cv.values.mis_optimal;
    j["closed"] = nullable(cv.values.closed_form);
    j["divisible"] = cv.values.divisible;
    j["consistent"] = cv.consistent;
    j["discrepancies"] = cv.discrepancies;
    return j;
}

} // namespace ldiag
