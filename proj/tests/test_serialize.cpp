#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "esir/serialize.hpp"

using namespace esir;
using njson = nlohmann::json;

TEST_CASE("graph document format is pinned") {
    std::string text = to_json(dandelion(3, 2));
    // exact bytes: format stability is part of the contract
    CHECK(text == R"({
  "family": "dandelion",
  "n": 3,
  "l": 2,
  "edges": [
    [
      "x1",
      "p0"
    ],
    [
      "p0",
      "p1"
    ]
  ]
})");
}

TEST_CASE("graph documents round-trip byte-identically") {
    for (const Graph& g : {dandelion(9, 5), dandelion(17, 8), star(4), path(5), dandelion(3, 2)}) {
        std::string once = to_json(g);
        Graph parsed = graph_from_json(once);
        CHECK(parsed.family() == g.family());
        CHECK(parsed.n() == g.n());
        CHECK(parsed.l() == g.l());
        CHECK(to_json(parsed) == once);
    }
}

TEST_CASE("graph parser accepts reordered edges but rejects wrong ones") {
    // reordered edge list, reversed endpoint order: still the same graph
    std::string reordered = R"({"family":"dandelion","n":3,"l":2,
        "edges":[["p1","p0"],["p0","x1"]]})";
    CHECK(to_json(graph_from_json(reordered)) == to_json(dandelion(3, 2)));

    std::string wrong = R"({"family":"dandelion","n":3,"l":2,
        "edges":[["x1","p0"],["x1","p1"]]})";
    CHECK_THROWS_WITH_AS(graph_from_json(wrong), doctest::Contains("edges"), ParseError);
}

TEST_CASE("graph parser names the offending field") {
    CHECK_THROWS_WITH_AS(graph_from_json("[]"), doctest::Contains("object"), ParseError);
    CHECK_THROWS_WITH_AS(graph_from_json("{not json"), doctest::Contains("invalid JSON"),
                         ParseError);
    CHECK_THROWS_WITH_AS(graph_from_json(R"({"n":3,"l":2,"edges":[]})"),
                         doctest::Contains("family"), ParseError);
    CHECK_THROWS_WITH_AS(
        graph_from_json(R"({"family":"windmill","n":3,"l":2,"edges":[]})"),
        doctest::Contains("windmill"), ParseError);
    CHECK_THROWS_WITH_AS(
        graph_from_json(R"({"family":"dandelion","n":"3","l":2,"edges":[]})"),
        doctest::Contains("\"n\""), ParseError);
    CHECK_THROWS_WITH_AS(
        graph_from_json(R"({"family":"dandelion","n":3,"l":2,"edges":[],"color":1})"),
        doctest::Contains("color"), ParseError);
    CHECK_THROWS_WITH_AS(
        graph_from_json(
            R"({"family":"dandelion","n":3,"l":2,"edges":[["x01","p0"],["p0","p1"]]})"),
        doctest::Contains("x01"), ParseError);
    CHECK_THROWS_WITH_AS(
        graph_from_json(
            R"({"family":"dandelion","n":3,"l":2,"edges":[["x1","p0"],["x1","p0"],["p0","p1"]]})"),
        doctest::Contains("duplicates"), ParseError);
    // family-level consistency
    CHECK_THROWS_WITH_AS(
        graph_from_json(R"({"family":"path","n":3,"l":2,"edges":[]})"),
        doctest::Contains("\"l\""), ParseError);
    // inadmissible dandelion parameters surface as domain errors
    CHECK_THROWS_AS(graph_from_json(R"({"family":"dandelion","n":3,"l":3,"edges":[]})"),
                    DomainError);
}

TEST_CASE("labeling documents round-trip and keep canonical key order") {
    Labeling phi;
    phi.k = 5;
    for (int i = 1; i <= 4; ++i) phi.labels[VertexId::leaf(i)] = i;
    for (int j = 0; j <= 4; ++j) phi.labels[VertexId::path_node(j)] = 1 + j;
    std::string once = to_json(phi);
    Labeling parsed = labeling_from_json(once);
    CHECK(parsed.k == phi.k);
    CHECK(parsed.labels == phi.labels);
    CHECK(to_json(parsed) == once);
    // keys serialize leaves-first in index order
    CHECK(once.find("\"x1\"") < once.find("\"x2\""));
    CHECK(once.find("\"x4\"") < once.find("\"p0\""));
}

TEST_CASE("labeling parser validates fields") {
    CHECK(labeling_from_json(R"({"k":2,"labels":{"p0":1,"p1":-3}})").labels.size() == 2);
    CHECK_THROWS_WITH_AS(labeling_from_json(R"({"labels":{}})"), doctest::Contains("\"k\""),
                         ParseError);
    CHECK_THROWS_WITH_AS(labeling_from_json(R"({"k":0,"labels":{}})"),
                         doctest::Contains("positive"), ParseError);
    CHECK_THROWS_WITH_AS(labeling_from_json(R"({"k":2,"labels":{"q1":1}})"),
                         doctest::Contains("q1"), ParseError);
    CHECK_THROWS_WITH_AS(labeling_from_json(R"({"k":2,"labels":{"p0":1.5}})"),
                         doctest::Contains("labels.p0"), ParseError);
    CHECK_THROWS_WITH_AS(labeling_from_json(R"({"k":2,"labels":{"p0":99999999999999999999}})"),
                         doctest::Contains("labels.p0"), ParseError);
    CHECK_THROWS_WITH_AS(labeling_from_json(R"({"k":2,"labels":{},"extra":0})"),
                         doctest::Contains("extra"), ParseError);
}

TEST_CASE("verify report serialization carries the certificate") {
    Labeling phi;
    phi.k = 1;
    for (int j = 0; j < 3; ++j) phi.labels[VertexId::path_node(j)] = 1;
    VerifyReport report = verify(path(3), phi);
    njson j = njson::parse(to_json(report));
    CHECK(j["valid"] == false);
    CHECK(j["out_of_range"].empty());
    REQUIRE(j["collisions"].size() == 1);
    CHECK(j["collisions"][0]["first_edge"] == njson::array({"p0", "p1"}));
    CHECK(j["collisions"][0]["second_edge"] == njson::array({"p1", "p2"}));
    CHECK(j["collisions"][0]["weight"] == 2);
    CHECK(j["weight_list"] == njson::array({2, 2}));
}

TEST_CASE("es result serialization") {
    EsResult r = es_exact(dandelion(9, 5));
    njson j = njson::parse(to_json(r));
    CHECK(j["status"] == "exact");
    CHECK(j["k"] == 5);
    CHECK(j["witness"]["k"] == 5);
    CHECK(j["witness"]["labels"].size() == 9);
    CHECK(j["k_range_checked"] == njson::array({5, 5}));
    CHECK(j["nodes_explored"].get<std::uint64_t>() > 0);

    SearchBudget tiny;
    tiny.max_nodes = 1;
    EsResult unknown = es_exact(dandelion(13, 5), tiny);
    njson ju = njson::parse(to_json(unknown));
    CHECK(ju["status"] == "unknown");
    CHECK(ju["witness"].is_null());
}

TEST_CASE("construction result serialization") {
    ConstructionResult r = construct(10, 5, true);
    njson j = njson::parse(to_json(r, 10, 5));
    CHECK(j["n"] == 10);
    CHECK(j["l"] == 5);
    CHECK(j["case"] == "Case1");
    CHECK(j["claimed_k"] == 6);
    CHECK(j["repaired"] == true);
    CHECK(j["labeling"]["k"] == 6);
    CHECK(j["report"]["valid"] == true);
}

TEST_CASE("dot export is hub-centered and complete") {
    Graph g = dandelion(17, 8);
    std::string dot = to_dot(g);
    CHECK(dot.find("graph dandelion_17_8 {") == 0);
    CHECK(dot.find("layout=twopi;") != std::string::npos);
    CHECK(dot.find("root=\"p0\";") != std::string::npos);
    std::size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = dot.find("\" -- \"", pos)) != std::string::npos) ++edges, pos += 6;
    for (VertexId v : g.vertices())
        if (dot.find("\"" + v.name() + "\"") != std::string::npos) ++nodes;
    CHECK(nodes == 17);
    CHECK(edges == 16);
    CHECK(to_dot(star(3)).find("graph star_3 {") == 0);
    CHECK(to_dot(path(4)).find("graph path_4 {") == 0);
}
