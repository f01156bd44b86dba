#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace eqdeg {

inline constexpr int kMaxOrder = 64;

using Edge = std::pair<int, int>;

/// A subset of {0, ..., 63} stored as one machine word.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr auto operator*() const -> int { return std::countr_zero(rest_); }
        constexpr auto operator++() -> iterator & {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr auto operator++(int) -> iterator {
            auto copy = *this;
            ++*this;
            return copy;
        }
        constexpr auto operator==(const iterator &) const -> bool = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);

    /// {0, ..., count-1}
    static constexpr auto range(int count) -> VertexSet {
        return VertexSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
    }
    static constexpr auto single(int v) -> VertexSet { return VertexSet(std::uint64_t{1} << v); }

    constexpr auto bits() const -> std::uint64_t { return bits_; }
    constexpr auto size() const -> int { return std::popcount(bits_); }
    constexpr auto empty() const -> bool { return bits_ == 0; }
    constexpr auto contains(int v) const -> bool { return (bits_ >> v) & 1U; }
    /// Smallest member; undefined on the empty set.
    constexpr auto first() const -> int { return std::countr_zero(bits_); }

    constexpr auto with(int v) const -> VertexSet { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr auto without(int v) const -> VertexSet { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr auto disjoint(VertexSet o) const -> bool { return (bits_ & o.bits_) == 0; }
    constexpr auto subset_of(VertexSet o) const -> bool { return (bits_ & ~o.bits_) == 0; }

    constexpr auto begin() const -> iterator { return iterator(bits_); }
    constexpr auto end() const -> iterator { return iterator(0); }

    friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr auto operator==(const VertexSet &) const -> bool = default;

    auto members() const -> std::vector<int>;

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on at most 64 vertices, one adjacency
/// word per vertex.
class Graph {
public:
    /// Single isolated vertex.
    Graph();

    /// Throws std::invalid_argument on an order outside 1..64, a loop, or an
    /// out-of-range endpoint. Duplicate edges collapse.
    static auto from_edges(int order, std::span<const Edge> edges) -> Graph;
    static auto from_edges(int order, std::initializer_list<Edge> edges) -> Graph;

    /// Rows must be symmetric, loop-free and confined to the vertex range.
    static auto from_rows(int order, std::span<const std::uint64_t> rows) -> Graph;

    auto order() const -> int { return order_; }
    auto edge_count() const -> int { return edges_; }
    auto vertices() const -> VertexSet { return VertexSet::range(order_); }
    auto row(int v) const -> std::uint64_t { return rows_[static_cast<std::size_t>(v)]; }
    auto neighbors(int v) const -> VertexSet { return VertexSet(row(v)); }
    auto adjacent(int a, int b) const -> bool { return (row(a) >> b) & 1U; }
    auto degree(int v) const -> int { return std::popcount(row(v)); }
    auto max_degree() const -> int;
    auto min_degree() const -> int;

    /// Degrees indexed by vertex.
    auto degrees() const -> std::vector<int>;
    /// Vertices whose degree equals `d`.
    auto degree_class(int d) const -> VertexSet;
    /// Edges (a, b) with a < b, in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    auto operator==(const Graph &other) const -> bool;

private:
    Graph(int order, const std::array<std::uint64_t, kMaxOrder> &rows);

    int order_ = 1;
    int edges_ = 0;
    std::array<std::uint64_t, kMaxOrder> rows_{};
};

/// Edge count inside a set (s == t) or between two disjoint sets, together
/// with the number of missing edges in the same block.
struct BlockCount {
    long long edges = 0;
    long long non_edges = 0;
};

auto complement(const Graph &g) -> Graph;

/// e(S) when s == t, e(S,T) when s and t are disjoint. Throws on overlapping
/// distinct sets or sets reaching outside the vertex range.
auto block_counts(const Graph &g, VertexSet s, VertexSet t) -> BlockCount;

/// Non-increasing.
auto degree_sequence(const Graph &g) -> std::vector<int>;

/// Largest d such that at least two vertices have degree d; empty when no
/// degree repeats (only possible on a single vertex).
auto largest_repeated_degree(const Graph &g) -> std::optional<int>;

/// Image of g under the map i -> perm[i].
auto relabel(const Graph &g, std::span<const int> perm) -> Graph;

/// Left side 0..a-1, right side a..a+b-1.
auto complete_bipartite(int a, int b) -> Graph;

/// a_1..a_n are vertices 0..n-1, b_1..b_n are n..2n-1, a_i ~ b_j iff i <= j.
auto half_graph(int n) -> Graph;

auto path_graph(int order) -> Graph;
auto cycle_graph(int order) -> Graph;
auto complete_graph(int order) -> Graph;
auto empty_graph(int order) -> Graph;
/// Centre 0 joined to leaves 1..leaves.
auto star_graph(int leaves) -> Graph;

/// True iff g is isomorphic to K_{a,b}; works at every order.
auto is_complete_bipartite(const Graph &g, int a, int b) -> bool;

inline auto binomial2(long long m) -> long long { return m * (m - 1) / 2; }

} // namespace eqdeg
