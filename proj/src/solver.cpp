#include "esir/solver.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace esir {

namespace {

using Clock = std::chrono::steady_clock;

// Membership set for weights in [2, 2k]; dense array when k is small enough,
// hash set otherwise so huge k cannot blow up memory.
class WeightSet {
public:
    explicit WeightSet(std::int64_t k) {
        if (k <= 2'000'000) dense_.assign(static_cast<std::size_t>(2 * k + 1), 0);
    }
    bool contains(std::int64_t w) const {
        if (!dense_.empty()) return dense_[static_cast<std::size_t>(w)] != 0;
        return sparse_.count(w) != 0;
    }
    void insert(std::int64_t w) {
        if (!dense_.empty()) dense_[static_cast<std::size_t>(w)] = 1;
        else sparse_.insert(w);
    }
    void erase(std::int64_t w) {
        if (!dense_.empty()) dense_[static_cast<std::size_t>(w)] = 0;
        else sparse_.erase(w);
    }

private:
    std::vector<char> dense_;
    std::unordered_set<std::int64_t> sparse_;
};

struct Searcher {
    const Graph& g;
    std::int64_t k;
    std::optional<std::uint64_t> max_nodes;
    std::optional<Clock::time_point> deadline;

    int vcount = 0;
    std::vector<int> order;                  // order position -> canonical index
    std::vector<std::vector<int>> earlier;   // per position: earlier adjacent positions
    std::vector<int> twin_pred;              // per position: previous same-neighborhood twin, or -1
    std::vector<std::int64_t> label;         // per position, 0 = unassigned
    WeightSet used;
    std::uint64_t nodes = 0;
    bool stopped = false;

    Searcher(const Graph& graph, std::int64_t bound, const std::optional<std::uint64_t>& mn,
             const std::optional<Clock::time_point>& dl)
        : g(graph), k(bound), max_nodes(mn), deadline(dl), used(bound) {
        vcount = static_cast<int>(g.vertices().size());
        const int leaves = g.leaf_count();

        // Hub first, then path nodes by index, then leaves: leaf weights all
        // share the hub label, so placing leaves last collides them early.
        order.reserve(vcount);
        for (int j = 0; j < g.l(); ++j)
            order.push_back(g.vertex_index(VertexId::path_node(j)));
        for (int i = 1; i <= leaves; ++i)
            order.push_back(g.vertex_index(VertexId::leaf(i)));

        std::vector<int> pos_of(vcount);
        for (int d = 0; d < vcount; ++d) pos_of[order[d]] = d;

        earlier.assign(vcount, {});
        for (const Edge& e : g.edges()) {
            int a = pos_of[g.vertex_index(e.first)];
            int b = pos_of[g.vertex_index(e.second)];
            earlier[std::max(a, b)].push_back(std::min(a, b));
        }

        // Interchangeable vertices (identical neighborhoods, hence
        // non-adjacent) are chained to non-decreasing labels: swapping their
        // labels only permutes edge weights, so the restriction keeps the
        // search complete.
        twin_pred.assign(vcount, -1);
        std::map<std::vector<VertexId>, std::vector<int>> classes;
        for (VertexId v : g.vertices())
            classes[g.neighbors(v)].push_back(pos_of[g.vertex_index(v)]);
        for (auto& [nbrs, members] : classes) {
            std::sort(members.begin(), members.end());
            for (std::size_t i = 1; i < members.size(); ++i)
                twin_pred[members[i]] = members[i - 1];
        }

        label.assign(vcount, 0);
    }

    bool out_of_budget() {
        if (max_nodes && nodes > *max_nodes) return true;
        // clock polled on the first node, then every 1024th
        if (deadline && (nodes & 0x3FF) == 1 && Clock::now() > *deadline) return true;
        return false;
    }

    // Returns true when a complete assignment was reached.
    bool dfs(int d) {
        if (d == vcount) return true;
        ++nodes;
        if (out_of_budget()) {
            stopped = true;
            return false;
        }
        const std::int64_t lo = twin_pred[d] >= 0 ? label[twin_pred[d]] : 1;
        const auto& nbrs = earlier[d];
        for (std::int64_t lab = lo; lab <= k; ++lab) {
            std::size_t placed = 0;
            bool ok = true;
            for (; placed < nbrs.size(); ++placed) {
                std::int64_t w = lab + label[nbrs[placed]];
                if (used.contains(w)) {
                    ok = false;
                    break;
                }
                used.insert(w);
            }
            if (ok) {
                label[d] = lab;
                if (dfs(d + 1)) return true;
                label[d] = 0;
            }
            for (std::size_t i = 0; i < placed; ++i) used.erase(lab + label[nbrs[i]]);
            if (stopped) return false;
        }
        return false;
    }

    SearchOutcome run() {
        // |E| distinct weights need |E| distinct values in [2, 2k].
        if (static_cast<std::int64_t>(g.edges().size()) > 2 * k - 1)
            return {SearchStatus::infeasible, std::nullopt, 0};

        if (dfs(0)) {
            Labeling witness;
            witness.k = k;
            for (int d = 0; d < vcount; ++d)
                witness.labels[g.vertices()[order[d]]] = label[d];
            return {SearchStatus::witness, std::move(witness), nodes};
        }
        return {stopped ? SearchStatus::unknown : SearchStatus::infeasible, std::nullopt, nodes};
    }
};

SearchOutcome search_impl(const Graph& g, std::int64_t k, std::optional<std::uint64_t> max_nodes,
                          std::optional<Clock::time_point> deadline) {
    if (k < 1) throw DomainError("exists_labeling: require k >= 1 (got " + std::to_string(k) + ")");
    Searcher searcher(g, k, max_nodes, deadline);
    return searcher.run();
}

}  // namespace

SearchOutcome exists_labeling(const Graph& g, std::int64_t k, const SearchBudget& budget) {
    std::optional<Clock::time_point> deadline;
    if (budget.max_time) deadline = Clock::now() + *budget.max_time;
    return search_impl(g, k, budget.max_nodes, deadline);
}

EsResult es_exact(const Graph& g, const SearchBudget& budget) {
    const BoundInfo info = lower_bound(g);
    const std::int64_t k0 = std::max<std::int64_t>(1, info.lower_bound);
    std::optional<Clock::time_point> deadline;
    if (budget.max_time) deadline = Clock::now() + *budget.max_time;

    EsResult result;
    result.k_checked_lo = k0;
    for (std::int64_t k = k0;; ++k) {
        std::optional<std::uint64_t> remaining;
        if (budget.max_nodes)  // searches never overdraw, so this cannot underflow
            remaining = *budget.max_nodes - result.nodes_explored;
        SearchOutcome out = search_impl(g, k, remaining, deadline);
        result.nodes_explored += out.nodes_explored;
        result.k = k;
        result.k_checked_hi = k;
        switch (out.status) {
            case SearchStatus::witness:
                result.status = EsResult::Status::exact;
                result.witness = std::move(out.witness);
                return result;
            case SearchStatus::unknown:
                result.status = EsResult::Status::unknown;
                return result;
            case SearchStatus::infeasible:
                break;  // es(G) is finite, so the ascent terminates
        }
    }
}

bool es_pigeonhole_check(const Graph& g, std::int64_t k) {
    return k < lower_bound(g).lower_bound;
}

}  // namespace esir
