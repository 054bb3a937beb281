#include "singcurve/fixture.hpp"

#include <fstream>

#include <json.hpp>

#include "singcurve/errors.hpp"

namespace singcurve {

namespace {

using nlohmann::json;

mpq_class parse_rational(const json& j) {
    if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0)
            throw FixtureError("bad rational literal: " + j.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw FixtureError("rational coefficient must be an integer or a \"p/q\" string");
}

std::vector<std::pair<long long, mpq_class>> parse_term_list(const json& j) {
    std::vector<std::pair<long long, mpq_class>> terms;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw FixtureError("series term must be an [exponent, coefficient] pair");
        terms.emplace_back(pair[0].get<long long>(), parse_rational(pair[1]));
    }
    return terms;
}

CurveModel parse_curve(const json& j) {
    if (!j.contains("branches")) throw FixtureError("curve payload needs \"branches\"");
    std::vector<BranchParam> branches;
    for (const auto& b : j["branches"]) {
        auto x = b.contains("x") ? parse_term_list(b["x"])
                                 : std::vector<std::pair<long long, mpq_class>>{};
        auto y = b.contains("y") ? parse_term_list(b["y"])
                                 : std::vector<std::pair<long long, mpq_class>>{};
        branches.emplace_back(std::move(x), std::move(y));
    }
    return CurveModel(std::move(branches));
}

DualGraph parse_graph(const json& j) {
    int r = j.value("r", 1);
    std::vector<DualGraph::Vertex> vertices;
    for (const auto& v : j.at("vertices"))
        vertices.push_back({v.at("id").get<int>(), v.at("self_int").get<long long>()});
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.value("edges", json::array()))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<DualGraph::Arrow> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back({a.at("vertex").get<int>(), a.at("branch").get<int>()});
    return DualGraph(r, std::move(vertices), std::move(edges), std::move(arrows));
}

}  // namespace

FixtureBundle load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FixtureError("invalid JSON in " + path + ": " + e.what());
    }

    FixtureBundle bundle;
    try {
        bundle.name = j.value("name", path);
        if (j.contains("char_exponents")) {
            CharExponents ce{j["char_exponents"].get<std::vector<long long>>()};
            ce.validate();
            bundle.char_exponents = std::move(ce);
        }
        if (j.contains("curve")) bundle.curve = parse_curve(j["curve"]);
        if (j.contains("graph")) bundle.graph = parse_graph(j["graph"]);
        if (j.contains("delta_sequence"))
            bundle.delta_sequence =
                SemigroupAtInfinity{j["delta_sequence"].get<std::vector<long long>>()};
    } catch (const json::exception& e) {
        throw FixtureError("malformed fixture " + path + ": " + e.what());
    }
    if (!bundle.has_payload()) throw FixtureError("fixture has no payload: " + path);
    return bundle;
}

}  // namespace singcurve
