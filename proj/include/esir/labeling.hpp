#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "esir/graph.hpp"

namespace esir {

/// Thrown when an operation touches a vertex the labeling does not cover.
struct UnlabeledVertex : std::runtime_error {
    VertexId vertex;
    explicit UnlabeledVertex(VertexId v)
        : std::runtime_error("unlabeled vertex " + v.name()), vertex(v) {}
};

/// Vertex labeling with a declared bound k. Labels outside [1,k] are
/// representable on purpose: the verifier reports them instead of the
/// constructor rejecting them, so third-party labelings can be audited.
struct Labeling {
    std::int64_t k = 1;
    std::map<VertexId, std::int64_t> labels;
};

/// Edge weight: sum of the endpoint labels. Throws UnlabeledVertex.
std::int64_t weight(const Labeling& phi, const Edge& e);

/// Two distinct edges sharing an edge weight.
struct Collision {
    Edge first_edge;
    Edge second_edge;
    std::int64_t weight;
};

struct VerifyReport {
    bool valid = false;
    std::vector<std::pair<VertexId, std::int64_t>> out_of_range;  // label < 1 or > k
    std::vector<Collision> collisions;    // every equal-weight pair, listed once
    std::vector<std::int64_t> weight_list;  // in canonical edge order
};

/// Checks that phi is an edge irregular k-labeling of g: every label in
/// [1, phi.k] and all edge weights pairwise distinct. The collision list is
/// exhaustive. Requires phi to label every vertex of g (UnlabeledVertex
/// otherwise).
VerifyReport verify(const Graph& g, const Labeling& phi);

/// es(G) >= max(ceil((|E|+1)/2), max_degree): distinct weights live in
/// [2, 2k], and the edges at a maximum-degree vertex need distinct co-labels.
struct BoundInfo {
    std::int64_t edge_term = 0;
    std::int64_t degree_term = 0;
    std::int64_t lower_bound = 0;
};

BoundInfo lower_bound(const Graph& g);

}  // namespace esir
