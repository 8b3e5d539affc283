#pragma once

#include <cstdint>
#include <string_view>

#include "esir/graph.hpp"
#include "esir/labeling.hpp"

namespace esir {

/// Regime of D(n,l), comparing the hub degree n-l+1 with the edge term
/// ceil(n/2): Case1 greater, Case2 equal, Case3 smaller.
enum class CaseKind { case1, case2, case3 };

std::string_view case_name(CaseKind c);

CaseKind classify(int n, int l);

struct ConstructionResult {
    Labeling labeling;
    std::int64_t claimed_k = 0;  // n-l+1 for Case1/Case2, n-l+ceil(l/2) for Case3
    CaseKind kind = CaseKind::case1;
    bool repaired = false;       // repair variant emitted instead of the verbatim one
    VerifyReport report;
};

/// Case 1 (n >= 2l) labeling: x_i=i, p0=1, p1=n-l+1, p2=4, then the pairs
/// (p3,p4)=n-l, (p5,p6)=n-l-1, ... truncated at p_{l-1}. The verbatim
/// formulas repeat a weight exactly when n=2l and l>=5 (the p1p2 edge and the
/// last descending path edge both weigh n-l+5); with allow_repair the variant
/// p2=3 is emitted for those instances and re-verified.
ConstructionResult construct_case1(int n, int l, bool allow_repair);

/// Case 2 (n = 2l-1 or 2l-2) labeling: as Case 1 but p1=p2=n-l+1.
ConstructionResult construct_case2(int n, int l);

/// Case 3 (n <= 2l-3) labeling: x_i=i, p0=1, pairs (p1,p2)=n-l+1,
/// (p3,p4)=n-l+2, ... truncated at p_{l-1}. Claimed bound n-l+ceil(l/2).
ConstructionResult construct_case3(int n, int l);

/// Dispatches on classify(n,l).
ConstructionResult construct(int n, int l, bool allow_repair = false);

}  // namespace esir
