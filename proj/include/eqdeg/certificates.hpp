#pragma once

#include "eqdeg/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqdeg {

/// A checker was called on an input outside its hypotheses.
class CertificateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Decomposition of V around two vertices u, v of equal degree beta:
/// B = N(u) & N(v), A_u = N(u) - B - v, A_v = N(v) - B - u, and D the rest.
/// n is floor(order / 2), so the order is 2n+1 or 2n.
struct PairPartition {
    int u = 0;
    int v = 0;
    int n = 0;
    int beta = 0;
    int ind = 0; // 1 iff uv is an edge
    VertexSet common;
    VertexSet only_u;
    VertexSet only_v;
    VertexSet rest;
    int x = 0; // |common|
    int c = 0; // beta - n - ind
    bool odd_order = true;
};

/// Throws CertificateError when u == v, a vertex is out of range, or the
/// degrees differ. Re-derives |A_u| = |A_v| = beta - x - ind and
/// |D| = x - 2c - 1 (odd order) or x - 2c - 2 (even order), throwing
/// std::logic_error if either fails.
auto pair_partition(const Graph &g, int u, int v) -> PairPartition;

/// e(A_u, B) = e(A_v, B) = e(B) = e(A_u, A_v) = 0. Equivalent to the absence
/// of a length-3 path between u and v.
auto check_zero_blocks(const Graph &g, const PairPartition &p) -> bool;

/// Complement counts around a pair with zero blocks.
struct ComplementIdentity {
    /// Missing edges over the seven blocks u-A_v, v-A_u, A_u-A_v, B-A_u,
    /// B-A_v, B, u-v, counted directly.
    long long listed_blocks = 0;
    /// (beta+1-ind)^2 - (x^2+5x)/2 - ind
    long long closed_form = 0;
    /// Missing edges inside V - D, counted directly. Adds the missing edges
    /// inside A_u and A_v to listed_blocks, so it is at least closed_form.
    long long outside_rest = 0;
    long long bd_complement = 0;
    long long d_complement = 0;
    long long complement_edges = 0;
    /// (beta-1-ind)^2 + 4n - (x^2+x)/2 - 2 - ind + missing(B,D) + missing(D)
    /// for odd order; -4 in place of -2 for even order.
    long long lower_bound = 0;

    auto listed_exact() const -> bool { return listed_blocks == closed_form; }
    auto outside_covers() const -> bool { return outside_rest >= closed_form; }
    auto bound_holds() const -> bool { return complement_edges >= lower_bound; }
    auto holds() const -> bool { return listed_exact() && outside_covers() && bound_holds(); }
};

/// Throws CertificateError unless the zero blocks hold.
auto check_complement_identity(const Graph &g, const PairPartition &p) -> ComplementIdentity;

/// Second decomposition inside D, driven by the two vertices of B with the
/// largest shared number gamma of neighbours in D. Ties go to the
/// lexicographically smallest pair.
struct SecondLevelPartition {
    int u1 = 0;
    int v1 = 0;
    int gamma = 0;
    VertexSet common;  // N_D(u1) & N_D(v1)
    VertexSet only_u1; // N_D(u1) - common
    VertexSet only_v1; // N_D(v1) - common
    int y = 0;         // |common|
};

struct CLemmaCheck {
    PairPartition pair;
    std::optional<SecondLevelPartition> second;

    long long d_complement = 0;  // missing(D), direct
    long long d_blocks = 0;      // missing edges over the four second-level blocks, direct
    long long d_blocks_closed = 0; // gamma^2 - (y^2+y)/2
    long long gamma_pairs = 0;   // C(gamma, 2)

    long long bd_complement = 0; // missing(B,D), direct
    long long bd_product = 0;    // (|D|-gamma)(2|B|-|D|+gamma-1)/2
    long long bd_expanded = 0;   // the same product written in x, c, gamma
    long long bd_relaxed = 0;    // after gamma <= |D|

    long long complement_edges = 0;
    long long assembled = 0; // missing(V-D) + 2|D| + missing(B,D) + missing(D), direct
    long long first_level = 0; // closed-form first-level bound with the direct D terms
    long long middle = 0;    // first-level bound with both intermediate bounds substituted
    long long final_bound = 0; // n^2 + c^2 - c - ind (odd), n^2 - n + c^2 - ind (even)

    std::vector<std::string> failures;

    auto holds() const -> bool { return failures.empty(); }
};

/// Requires a graph with no length-3 equal-degree path and a pair with
/// c >= 1; throws CertificateError otherwise. Every inequality of the chain
/// is compared against direct counts and any failure is listed.
auto check_c_lemma(const Graph &g, int u, int v) -> CLemmaCheck;

struct Violation {
    std::string graph6;
    std::vector<int> pair; // empty for whole-graph checks
    std::string detail;

    auto operator<=>(const Violation &) const = default;
};

struct CheckRecord {
    std::string check;
    int order = 0;
    /// Number of times the hypotheses held and the conclusion was tested.
    std::uint64_t instances = 0;
    std::vector<Violation> violations;
};

/// Check ids, in report order.
inline constexpr std::string_view kPairPartitionCheck = "pair_partition";
inline constexpr std::string_view kZeroBlocksCheck = "zero_blocks";
inline constexpr std::string_view kComplementCheck = "complement_identity";
inline constexpr std::string_view kCLemmaCheck = "c_lemma";
inline constexpr std::string_view kBetaUpperCheck = "beta_upper_bound";
inline constexpr std::string_view kBetaLowerCheck = "beta_lower_bound";
inline constexpr std::string_view kDichotomyCheck = "beta_dichotomy";
inline constexpr std::string_view kMaxDegreeCheck = "max_degree_bound";
inline constexpr std::string_view kNeighborDegreesCheck = "common_neighbor_degrees";
inline constexpr std::string_view kThreeEqualCheck = "no_three_equal_degrees";
inline constexpr std::string_view kNeighborSplitCheck = "max_degree_neighbor_split";

auto certificate_check_ids() -> const std::vector<std::string_view> &;

struct CertificateReport {
    int order = 0;
    std::uint64_t graphs = 0;
    std::vector<CheckRecord> checks;

    /// Report with every check id present and zero counts.
    static auto empty(int order) -> CertificateReport;

    /// Throws std::out_of_range on an unknown id.
    auto at(std::string_view id) -> CheckRecord &;
    auto at(std::string_view id) const -> const CheckRecord &;

    auto violation_count() const -> std::uint64_t;

    /// Adds counts and violations; violations are kept sorted.
    auto merge(const CertificateReport &other) -> void;

    /// "cert-report/1" document.
    auto to_json(int indent = 2) const -> std::string;
};

/// Whole-graph lemmas on a graph free of length-3 equal-degree paths, each
/// gated by its hypotheses (order parity, range of n, edge threshold n^2+n
/// for order 2n+1 and n^2-1 for order 2n). Throws CertificateError on a graph
/// that has such a path.
auto check_global_lemmas(const Graph &g) -> CertificateReport;

/// Every pair check on every equal-degree pair plus the global lemmas, added
/// into `report`. Same precondition as check_global_lemmas.
auto certify_graph(const Graph &g, CertificateReport &report) -> void;

} // namespace eqdeg
