#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "esir/graph.hpp"
#include "esir/labeling.hpp"

namespace esir {

/// Limits for one search. Exhausting a limit yields an explicit "unknown"
/// outcome, never a silent wrong answer. Absent fields mean unlimited.
struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_time;
};

enum class SearchStatus { witness, infeasible, unknown };

struct SearchOutcome {
    SearchStatus status = SearchStatus::unknown;
    std::optional<Labeling> witness;
    std::uint64_t nodes_explored = 0;
};

/// Complete backtracking search for an edge irregular k-labeling of g.
/// Labels are assigned hub first, then path nodes by index, then leaves,
/// pruning any partial assignment that repeats an edge weight. Vertices with
/// identical neighborhoods are constrained to non-decreasing labels (their
/// label swaps permute weights without changing the weight multiset).
/// Deterministic: identical inputs give identical outcomes and witnesses.
SearchOutcome exists_labeling(const Graph& g, std::int64_t k,
                              const SearchBudget& budget = {});

struct EsResult {
    enum class Status { exact, infeasible_at, unknown };

    Status status = Status::unknown;
    std::int64_t k = 0;  // exact es for exact, otherwise the last k attempted
    std::optional<Labeling> witness;
    std::uint64_t nodes_explored = 0;
    std::int64_t k_checked_lo = 0;  // every k in [lo, hi] was attempted
    std::int64_t k_checked_hi = 0;
};

/// Exact edge irregularity strength: iterative deepening from the pigeonhole
/// lower bound until a witness appears. Every k below the returned value was
/// proved infeasible by exists_labeling.
EsResult es_exact(const Graph& g, const SearchBudget& budget = {});

/// True iff k sits strictly below the lower bound, so search can be skipped.
bool es_pigeonhole_check(const Graph& g, std::int64_t k);

}  // namespace esir
