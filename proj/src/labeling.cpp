#include "esir/labeling.hpp"

#include <algorithm>
#include <unordered_map>

namespace esir {

namespace {

// Sums fit comfortably in int64 for any label the toolkit accepts (the
// contract caps k at 2e9); the guard keeps third-party documents honest.
constexpr std::int64_t kMaxAbsLabel = std::int64_t{1} << 62;

std::int64_t label_of(const Labeling& phi, VertexId v) {
    auto it = phi.labels.find(v);
    if (it == phi.labels.end()) throw UnlabeledVertex(v);
    if (it->second > kMaxAbsLabel || it->second < -kMaxAbsLabel)
        throw std::overflow_error("label magnitude too large at " + v.name());
    return it->second;
}

}  // namespace

std::int64_t weight(const Labeling& phi, const Edge& e) {
    return label_of(phi, e.first) + label_of(phi, e.second);
}

VerifyReport verify(const Graph& g, const Labeling& phi) {
    VerifyReport report;
    for (VertexId v : g.vertices()) {
        std::int64_t lab = label_of(phi, v);
        if (lab < 1 || lab > phi.k) report.out_of_range.emplace_back(v, lab);
    }

    const auto& edges = g.edges();
    report.weight_list.reserve(edges.size());
    for (const Edge& e : edges) report.weight_list.push_back(weight(phi, e));

    // Exhaustive collision certificate: every unordered pair of equal-weight
    // edges, ordered by canonical edge index.
    std::unordered_map<std::int64_t, std::vector<int>> by_weight;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        by_weight[report.weight_list[i]].push_back(i);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [w, idxs] : by_weight) {
        for (std::size_t a = 0; a + 1 < idxs.size(); ++a)
            for (std::size_t b = a + 1; b < idxs.size(); ++b)
                pairs.emplace_back(idxs[a], idxs[b]);
    }
    std::sort(pairs.begin(), pairs.end());
    report.collisions.reserve(pairs.size());
    for (auto [i, j] : pairs)
        report.collisions.push_back({edges[i], edges[j], report.weight_list[i]});

    report.valid = report.out_of_range.empty() && report.collisions.empty();
    return report;
}

BoundInfo lower_bound(const Graph& g) {
    if (g.vertices().empty()) throw DomainError("lower_bound: empty graph");
    std::int64_t m = g.edge_count();
    BoundInfo info;
    info.edge_term = (m + 2) / 2;  // ceil((|E|+1)/2)
    info.degree_term = max_degree(g);
    info.lower_bound = std::max(info.edge_term, info.degree_term);
    return info;
}

}  // namespace esir
