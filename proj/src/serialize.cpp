#include "esir/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include <json.hpp>

namespace esir {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::int64_t kMaxAbsLabel = std::int64_t{1} << 62;

[[noreturn]] void fail(const std::string& doc, const std::string& what) {
    throw ParseError(doc + " document: " + what);
}

ojson parse_object(const std::string& doc, const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(doc, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(doc, "root must be an object");
    return j;
}

void reject_unknown_fields(const std::string& doc, const ojson& j,
                           std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end())
            fail(doc, "unknown field \"" + key + "\"");
    }
}

const ojson& require_field(const std::string& doc, const ojson& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end()) fail(doc, std::string("missing field \"") + field + "\"");
    return *it;
}

std::int64_t get_int(const std::string& doc, const ojson& j, const std::string& field) {
    if (!j.is_number_integer()) fail(doc, "field \"" + field + "\" must be an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxAbsLabel))
        fail(doc, "field \"" + field + "\" out of representable range");
    std::int64_t v = j.get<std::int64_t>();
    if (v > kMaxAbsLabel || v < -kMaxAbsLabel)
        fail(doc, "field \"" + field + "\" out of representable range");
    return v;
}

int get_count(const std::string& doc, const ojson& j, const std::string& field) {
    std::int64_t v = get_int(doc, j, field);
    if (v < 0 || v > 1'000'000'000) fail(doc, "field \"" + field + "\" out of range");
    return static_cast<int>(v);
}

ojson edge_to_json(const Edge& e) {
    return ojson::array({e.first.name(), e.second.name()});
}

ojson labeling_to_json(const Labeling& phi) {
    ojson j;
    j["k"] = phi.k;
    ojson labels = ojson::object();
    for (const auto& [v, lab] : phi.labels) labels[v.name()] = lab;
    j["labels"] = std::move(labels);
    return j;
}

ojson report_to_json(const VerifyReport& report) {
    ojson j;
    j["valid"] = report.valid;
    ojson oor = ojson::array();
    for (const auto& [v, lab] : report.out_of_range)
        oor.push_back(ojson{{"vertex", v.name()}, {"label", lab}});
    j["out_of_range"] = std::move(oor);
    ojson cols = ojson::array();
    for (const Collision& c : report.collisions)
        cols.push_back(ojson{{"first_edge", edge_to_json(c.first_edge)},
                             {"second_edge", edge_to_json(c.second_edge)},
                             {"weight", c.weight}});
    j["collisions"] = std::move(cols);
    j["weight_list"] = report.weight_list;
    return j;
}

}  // namespace

std::string to_json(const Graph& g) {
    ojson j;
    j["family"] = std::string(family_name(g.family()));
    j["n"] = g.n();
    j["l"] = g.l();
    ojson edges = ojson::array();
    for (const Edge& e : g.edges()) edges.push_back(edge_to_json(e));
    j["edges"] = std::move(edges);
    return j.dump(2);
}

Graph graph_from_json(const std::string& text) {
    const std::string doc = "graph";
    ojson j = parse_object(doc, text);
    reject_unknown_fields(doc, j, {"family", "n", "l", "edges"});
    const ojson& jfam = require_field(doc, j, "family");
    if (!jfam.is_string()) fail(doc, "field \"family\" must be a string");
    std::string family = jfam.get<std::string>();
    int n = get_count(doc, require_field(doc, j, "n"), "n");
    int l = get_count(doc, require_field(doc, j, "l"), "l");

    Graph g = [&]() -> Graph {
        if (family == "dandelion") return dandelion(n, l);
        if (family == "star") {
            if (l != 1) fail(doc, "field \"l\" must be 1 for family \"star\"");
            return star(n - 1);
        }
        if (family == "path") {
            if (l != n) fail(doc, "field \"l\" must equal \"n\" for family \"path\"");
            return path(n);
        }
        fail(doc, "unknown family \"" + family + "\"");
    }();

    const ojson& jedges = require_field(doc, j, "edges");
    if (!jedges.is_array()) fail(doc, "field \"edges\" must be an array");
    std::set<Edge> seen;
    for (std::size_t i = 0; i < jedges.size(); ++i) {
        const ojson& je = jedges[i];
        std::string where = "edges[" + std::to_string(i) + "]";
        if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string())
            fail(doc, where + " must be a pair of vertex names");
        auto a = VertexId::parse(je[0].get<std::string>());
        auto b = VertexId::parse(je[1].get<std::string>());
        if (!a) fail(doc, "invalid vertex name \"" + je[0].get<std::string>() + "\" in " + where);
        if (!b) fail(doc, "invalid vertex name \"" + je[1].get<std::string>() + "\" in " + where);
        if (*a == *b) fail(doc, where + " is a loop at \"" + a->name() + "\"");
        if (!seen.insert(make_edge(*a, *b)).second)
            fail(doc, where + " duplicates an earlier edge");
    }
    std::set<Edge> expected(g.edges().begin(), g.edges().end());
    if (seen != expected)
        fail(doc, "field \"edges\" does not match family \"" + family + "\" with n=" +
                      std::to_string(n) + ", l=" + std::to_string(l));
    return g;
}

std::string to_json(const Labeling& phi) { return labeling_to_json(phi).dump(2); }

Labeling labeling_from_json(const std::string& text) {
    const std::string doc = "labeling";
    ojson j = parse_object(doc, text);
    reject_unknown_fields(doc, j, {"k", "labels"});
    Labeling phi;
    phi.k = get_int(doc, require_field(doc, j, "k"), "k");
    if (phi.k < 1) fail(doc, "field \"k\" must be a positive integer");
    const ojson& jlabels = require_field(doc, j, "labels");
    if (!jlabels.is_object()) fail(doc, "field \"labels\" must be an object");
    for (const auto& [key, value] : jlabels.items()) {
        auto v = VertexId::parse(key);
        if (!v) fail(doc, "invalid vertex name \"" + key + "\" in \"labels\"");
        phi.labels[*v] = get_int(doc, value, "labels." + key);
    }
    return phi;
}

std::string to_json(const VerifyReport& report) { return report_to_json(report).dump(2); }

std::string to_json(const EsResult& result) {
    ojson j;
    switch (result.status) {
        case EsResult::Status::exact: j["status"] = "exact"; break;
        case EsResult::Status::infeasible_at: j["status"] = "infeasible_at"; break;
        case EsResult::Status::unknown: j["status"] = "unknown"; break;
    }
    j["k"] = result.k;
    j["witness"] = result.witness ? labeling_to_json(*result.witness) : ojson(nullptr);
    j["nodes_explored"] = result.nodes_explored;
    j["k_range_checked"] = ojson::array({result.k_checked_lo, result.k_checked_hi});
    return j.dump(2);
}

std::string to_json(const ConstructionResult& result, int n, int l) {
    ojson j;
    j["n"] = n;
    j["l"] = l;
    j["case"] = std::string(case_name(result.kind));
    j["claimed_k"] = result.claimed_k;
    j["repaired"] = result.repaired;
    j["labeling"] = labeling_to_json(result.labeling);
    j["report"] = report_to_json(result.report);
    return j.dump(2);
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    std::string title;
    switch (g.family()) {
        case Family::dandelion:
            title = "dandelion_" + std::to_string(g.n()) + "_" + std::to_string(g.l());
            break;
        case Family::star: title = "star_" + std::to_string(g.leaf_count()); break;
        case Family::path: title = "path_" + std::to_string(g.l()); break;
    }
    out << "graph " << title << " {\n";
    out << "  layout=twopi;\n";
    out << "  root=\"p0\";\n";
    for (VertexId v : g.vertices()) {
        out << "  \"" << v.name() << "\"";
        if (v.is_hub()) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const Edge& e : g.edges())
        out << "  \"" << e.first.name() << "\" -- \"" << e.second.name() << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace esir
