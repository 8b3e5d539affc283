#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esir/construct.hpp"
#include "esir/solver.hpp"

namespace esir {

struct SweepOptions {
    int l_min = 2;
    int l_max = 2;
    int n_max = 3;
    int exact_up_to = 0;  // run es_exact only for n <= exact_up_to
    int jobs = 1;
    bool verbatim = false;  // verbatim constructions, no repair
    SearchBudget budget;
};

/// One grid instance: construction outcome, bound, optional exact value, and
/// the discrepancy flag (invalid construction, or exact value disagreeing
/// with the claimed n-l+1 on Case1/Case2).
struct SweepRecord {
    int n = 0;
    int l = 0;
    CaseKind kind = CaseKind::case1;
    std::int64_t lower_bound = 0;
    std::int64_t constructive_k = 0;
    bool construction_valid = false;
    bool repaired = false;
    std::optional<std::int64_t> exact_k;
    bool discrepancy = false;
    std::int64_t construct_ms = 0;
    std::optional<std::int64_t> exact_ms;
};

/// Runs every admissible (n,l) with l_min <= l <= l_max and n <= n_max,
/// ordered by (l, n). Instances are independent and run on opt.jobs threads;
/// rows come back in grid order regardless of worker count.
std::vector<SweepRecord> run_sweep(const SweepOptions& opt);

/// CSV with the fixed column order
/// n,l,case,lower_bound,constructive_k,construction_valid,repaired,exact_k,
/// discrepancy,construct_ms,exact_ms. Header included.
std::string sweep_csv(const std::vector<SweepRecord>& records);

int count_discrepancies(const std::vector<SweepRecord>& records);

}  // namespace esir
