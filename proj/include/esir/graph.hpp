#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace esir {

/// Parameter or precondition violation; the message names the violated bound.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A vertex is either a star leaf x_i (i >= 1) or a path node p_j (j >= 0).
/// The hub is represented only as p0; it never carries a leaf role.
struct VertexId {
    enum class Role : unsigned char { leaf = 0, path_node = 1 };

    Role role{Role::path_node};
    int index{0};

    static VertexId leaf(int i);
    static VertexId path_node(int j);
    static VertexId hub() { return path_node(0); }

    bool is_hub() const { return role == Role::path_node && index == 0; }

    /// Canonical name: "x3" for leaf(3), "p0" for path_node(0).
    std::string name() const;

    /// Parses names matching ^x[1-9][0-9]*$ or ^p(0|[1-9][0-9]*)$.
    static std::optional<VertexId> parse(std::string_view name);

    // Canonical order: leaves by index, then path nodes by index.
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Undirected edge, stored with endpoints in canonical order.
using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(VertexId a, VertexId b);

enum class Family { dandelion, star, path };

std::string_view family_name(Family f);

/// Simple undirected graph over the leaf/path vertex naming scheme.
/// Immutable after construction; safe to share across threads.
class Graph {
public:
    Family family() const { return family_; }
    int n() const { return n_; }                  // total vertex count
    int l() const { return l_; }                  // path node count
    int leaf_count() const { return n_ - l_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Vertices in canonical order: x1..x_{n-l}, p0..p_{l-1}.
    const std::vector<VertexId>& vertices() const { return vertices_; }
    /// Edges sorted lexicographically by canonical endpoint order.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const;
    /// Position of v in canonical order; throws DomainError if absent.
    int vertex_index(VertexId v) const;
    int degree(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;

private:
    Graph(Family f, int n, int l, std::vector<Edge> edges);

    friend Graph dandelion(int n, int l);
    friend Graph star(int leaf_count);
    friend Graph path(int length);

    Family family_;
    int n_;
    int l_;
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;  // by canonical vertex position
};

/// Dandelion D(n,l): star on n-l leaves whose center is p0, plus the path
/// p0..p_{l-1}. Requires l >= 2 and n >= l+1.
Graph dandelion(int n, int l);

/// Star with one center p0 adjacent to leaf_count leaves. Requires leaf_count >= 1.
Graph star(int leaf_count);

/// Path p0..p_{length-1}. Requires length >= 1.
Graph path(int length);

/// Maximum vertex degree. For D(n,l) this is n-l+1, achieved at the hub.
int max_degree(const Graph& g);

}  // namespace esir
