#pragma once

#include <stdexcept>
#include <string>

#include "esir/construct.hpp"
#include "esir/graph.hpp"
#include "esir/labeling.hpp"
#include "esir/solver.hpp"

namespace esir {

/// Malformed document; the message names the offending field.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All serializers are byte-stable: same value, same bytes. Documents use the
// vertex name grammar x[1-9][0-9]* / p(0|[1-9][0-9]*) throughout.

/// {"family":"dandelion","n":9,"l":5,"edges":[["x1","p0"],...]}
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// {"k":5,"labels":{"x1":1,...,"p0":1,...}}
std::string to_json(const Labeling& phi);
Labeling labeling_from_json(const std::string& text);

std::string to_json(const VerifyReport& report);

std::string to_json(const EsResult& result);

/// Full construction document, including the embedded labeling and report.
std::string to_json(const ConstructionResult& result, int n, int l);

/// Hub-centered DOT (twopi layout rooted at p0, leaves ranked around it).
std::string to_dot(const Graph& g);

}  // namespace esir
