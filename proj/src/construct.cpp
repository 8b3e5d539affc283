#include "esir/construct.hpp"

#include <string>

namespace esir {

namespace {

void check_admissible(const char* op, int n, int l) {
    if (l < 2)
        throw DomainError(std::string(op) + ": require l >= 2 (got l=" + std::to_string(l) + ")");
    if (n < l + 1)
        throw DomainError(std::string(op) + ": require n >= l+1 (got n=" + std::to_string(n) +
                          ", l=" + std::to_string(l) + ")");
}

void check_case(const char* op, int n, int l, CaseKind expected) {
    CaseKind actual = classify(n, l);
    if (actual != expected)
        throw DomainError(std::string(op) + ": D(" + std::to_string(n) + "," + std::to_string(l) +
                          ") is " + std::string(case_name(actual)) + ", not " +
                          std::string(case_name(expected)));
}

Labeling base_labeling(int n, int l, std::int64_t k) {
    Labeling phi;
    phi.k = k;
    for (int i = 1; i <= n - l; ++i) phi.labels[VertexId::leaf(i)] = i;
    phi.labels[VertexId::hub()] = 1;
    return phi;
}

// Pairs (p_{2i+1}, p_{2i+2}) = n-l-(i-1) for i >= 1, truncated at p_{l-1};
// a truncated pair's lone member keeps the pair's value. Shared by the
// descending tails of cases 1 and 2.
void assign_descending_tail(Labeling& phi, int n, int l) {
    for (int i = 1; 2 * i + 1 <= l - 1; ++i) {
        std::int64_t value = n - l - (i - 1);
        phi.labels[VertexId::path_node(2 * i + 1)] = value;
        if (2 * i + 2 <= l - 1) phi.labels[VertexId::path_node(2 * i + 2)] = value;
    }
}

ConstructionResult finish(int n, int l, Labeling phi, std::int64_t claimed_k, CaseKind kind,
                          bool repaired) {
    Graph g = dandelion(n, l);
    VerifyReport report = verify(g, phi);
    return ConstructionResult{std::move(phi), claimed_k, kind, repaired, std::move(report)};
}

}  // namespace

std::string_view case_name(CaseKind c) {
    switch (c) {
        case CaseKind::case1: return "Case1";
        case CaseKind::case2: return "Case2";
        case CaseKind::case3: return "Case3";
    }
    return "?";
}

CaseKind classify(int n, int l) {
    check_admissible("classify", n, l);
    int degree_term = n - l + 1;      // hub degree
    int edge_term = (n + 1) / 2;      // ceil((|E|+1)/2) with |E| = n-1
    if (degree_term > edge_term) return CaseKind::case1;
    if (degree_term == edge_term) return CaseKind::case2;
    return CaseKind::case3;
}

ConstructionResult construct_case1(int n, int l, bool allow_repair) {
    check_case("construct_case1", n, l, CaseKind::case1);
    std::int64_t k = n - l + 1;

    Labeling phi = base_labeling(n, l, k);
    phi.labels[VertexId::path_node(1)] = k;
    if (l >= 3) phi.labels[VertexId::path_node(2)] = 4;
    assign_descending_tail(phi, n, l);

    ConstructionResult result = finish(n, l, std::move(phi), k, CaseKind::case1, false);
    if (result.report.valid || !allow_repair || l < 3) return result;

    // The verbatim labels collide when n = 2l, l >= 5: w(p1p2) = n-l+5 equals
    // the bottom of the descending tail. Lowering p2 to 3 moves w(p1p2) to
    // n-l+4 and w(p2p3) to n-l+3, clear of everything else.
    Labeling repair = base_labeling(n, l, k);
    repair.labels[VertexId::path_node(1)] = k;
    repair.labels[VertexId::path_node(2)] = 3;
    assign_descending_tail(repair, n, l);
    return finish(n, l, std::move(repair), k, CaseKind::case1, true);
}

ConstructionResult construct_case2(int n, int l) {
    check_case("construct_case2", n, l, CaseKind::case2);
    std::int64_t k = n - l + 1;

    Labeling phi = base_labeling(n, l, k);
    phi.labels[VertexId::path_node(1)] = k;
    if (l >= 3) phi.labels[VertexId::path_node(2)] = k;
    assign_descending_tail(phi, n, l);
    return finish(n, l, std::move(phi), k, CaseKind::case2, false);
}

ConstructionResult construct_case3(int n, int l) {
    check_case("construct_case3", n, l, CaseKind::case3);
    std::int64_t k = (n - l) + (l + 1) / 2;  // n-l+ceil(l/2)

    // Pairs (p_{2i-1}, p_{2i}) = n-l+i for i >= 1, truncated at p_{l-1}.
    Labeling phi = base_labeling(n, l, k);
    for (int i = 1; 2 * i - 1 <= l - 1; ++i) {
        std::int64_t value = n - l + i;
        phi.labels[VertexId::path_node(2 * i - 1)] = value;
        if (2 * i <= l - 1) phi.labels[VertexId::path_node(2 * i)] = value;
    }
    return finish(n, l, std::move(phi), k, CaseKind::case3, false);
}

ConstructionResult construct(int n, int l, bool allow_repair) {
    switch (classify(n, l)) {
        case CaseKind::case1: return construct_case1(n, l, allow_repair);
        case CaseKind::case2: return construct_case2(n, l);
        case CaseKind::case3: return construct_case3(n, l);
    }
    throw DomainError("construct: unreachable");
}

}  // namespace esir
