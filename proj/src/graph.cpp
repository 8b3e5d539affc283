#include "esir/graph.hpp"

#include <algorithm>
#include <charconv>

namespace esir {

VertexId VertexId::leaf(int i) {
    if (i < 1) throw DomainError("leaf index must be >= 1 (got " + std::to_string(i) + ")");
    return VertexId{Role::leaf, i};
}

VertexId VertexId::path_node(int j) {
    if (j < 0) throw DomainError("path node index must be >= 0 (got " + std::to_string(j) + ")");
    return VertexId{Role::path_node, j};
}

std::string VertexId::name() const {
    return (role == Role::leaf ? "x" : "p") + std::to_string(index);
}

std::optional<VertexId> VertexId::parse(std::string_view name) {
    if (name.size() < 2) return std::nullopt;
    char prefix = name[0];
    if (prefix != 'x' && prefix != 'p') return std::nullopt;
    std::string_view digits = name.substr(1);
    // digits only, no leading zeros except the single digit "0"
    if (digits[0] == '0' && digits.size() > 1) return std::nullopt;
    for (char ch : digits)
        if (ch < '0' || ch > '9') return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    if (prefix == 'x') {
        if (value < 1) return std::nullopt;
        return VertexId::leaf(value);
    }
    return VertexId::path_node(value);
}

Edge make_edge(VertexId a, VertexId b) {
    if (a == b) throw DomainError("loop edge at " + a.name());
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::dandelion: return "dandelion";
        case Family::star: return "star";
        case Family::path: return "path";
    }
    return "?";
}

Graph::Graph(Family f, int n, int l, std::vector<Edge> edges)
    : family_(f), n_(n), l_(l), edges_(std::move(edges)) {
    vertices_.reserve(n_);
    for (int i = 1; i <= n_ - l_; ++i) vertices_.push_back(VertexId::leaf(i));
    for (int j = 0; j < l_; ++j) vertices_.push_back(VertexId::path_node(j));
    degrees_.assign(n_, 0);
    for (const Edge& e : edges_) {
        ++degrees_[vertex_index(e.first)];
        ++degrees_[vertex_index(e.second)];
    }
}

bool Graph::has_vertex(VertexId v) const {
    if (v.role == VertexId::Role::leaf) return v.index >= 1 && v.index <= n_ - l_;
    return v.index >= 0 && v.index < l_;
}

int Graph::vertex_index(VertexId v) const {
    if (!has_vertex(v))
        throw DomainError("vertex " + v.name() + " not in " + std::string(family_name(family_)) +
                          " graph with n=" + std::to_string(n_) + ", l=" + std::to_string(l_));
    if (v.role == VertexId::Role::leaf) return v.index - 1;
    return (n_ - l_) + v.index;
}

int Graph::degree(VertexId v) const { return degrees_[vertex_index(v)]; }

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const Edge& e : edges_) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph dandelion(int n, int l) {
    if (l < 2)
        throw DomainError("dandelion: require l >= 2 (got l=" + std::to_string(l) + ")");
    if (n < l + 1)
        throw DomainError("dandelion: require n >= l+1 (got n=" + std::to_string(n) +
                          ", l=" + std::to_string(l) + ")");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 1; i <= n - l; ++i)
        edges.emplace_back(VertexId::leaf(i), VertexId::hub());
    for (int j = 0; j + 1 < l; ++j)
        edges.emplace_back(VertexId::path_node(j), VertexId::path_node(j + 1));
    return Graph(Family::dandelion, n, l, std::move(edges));
}

Graph star(int leaf_count) {
    if (leaf_count < 1)
        throw DomainError("star: require leaf count >= 1 (got " + std::to_string(leaf_count) + ")");
    std::vector<Edge> edges;
    edges.reserve(leaf_count);
    for (int i = 1; i <= leaf_count; ++i)
        edges.emplace_back(VertexId::leaf(i), VertexId::hub());
    return Graph(Family::star, leaf_count + 1, 1, std::move(edges));
}

Graph path(int length) {
    if (length < 1)
        throw DomainError("path: require length >= 1 (got " + std::to_string(length) + ")");
    std::vector<Edge> edges;
    edges.reserve(length - 1);
    for (int j = 0; j + 1 < length; ++j)
        edges.emplace_back(VertexId::path_node(j), VertexId::path_node(j + 1));
    return Graph(Family::path, length, length, std::move(edges));
}

int max_degree(const Graph& g) {
    if (g.vertices().empty()) throw DomainError("max_degree: empty graph");
    int best = 0;
    for (VertexId v : g.vertices()) best = std::max(best, g.degree(v));
    return best;
}

}  // namespace esir
