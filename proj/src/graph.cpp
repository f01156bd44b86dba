#include "eqdeg/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace eqdeg {

namespace {

auto check_order(int order) -> void
{
    if (order < 1 || order > kMaxOrder)
        throw std::invalid_argument("graph order must be in 1..64, got " + std::to_string(order));
}

} // namespace

VertexSet::VertexSet(std::initializer_list<int> members)
{
    for (int v : members) {
        if (v < 0 || v >= kMaxOrder)
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
        bits_ |= std::uint64_t{1} << v;
    }
}

auto VertexSet::members() const -> std::vector<int>
{
    return {begin(), end()};
}

Graph::Graph() = default;

Graph::Graph(int order, const std::array<std::uint64_t, kMaxOrder> &rows) : order_(order), rows_(rows)
{
    int twice = 0;
    for (int v = 0; v < order_; ++v)
        twice += std::popcount(rows_[static_cast<std::size_t>(v)]);
    edges_ = twice / 2;
}

auto Graph::from_edges(int order, std::span<const Edge> edges) -> Graph
{
    check_order(order);
    std::array<std::uint64_t, kMaxOrder> rows{};
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= order || b >= order)
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") has an endpoint outside 0.." + std::to_string(order - 1));
        if (a == b)
            throw std::invalid_argument("loop at vertex " + std::to_string(a));
        rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        rows[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
    return Graph(order, rows);
}

auto Graph::from_edges(int order, std::initializer_list<Edge> edges) -> Graph
{
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

auto Graph::from_rows(int order, std::span<const std::uint64_t> rows) -> Graph
{
    check_order(order);
    if (static_cast<int>(rows.size()) != order)
        throw std::invalid_argument("expected one adjacency row per vertex");
    std::array<std::uint64_t, kMaxOrder> copy{};
    auto range = VertexSet::range(order).bits();
    for (int v = 0; v < order; ++v) {
        auto r = rows[static_cast<std::size_t>(v)];
        if ((r & ~range) != 0)
            throw std::invalid_argument("adjacency row " + std::to_string(v) + " leaves the vertex range");
        if ((r >> v) & 1U)
            throw std::invalid_argument("loop at vertex " + std::to_string(v));
        copy[static_cast<std::size_t>(v)] = r;
    }
    for (int v = 0; v < order; ++v)
        for (int w : VertexSet(copy[static_cast<std::size_t>(v)]))
            if (((copy[static_cast<std::size_t>(w)] >> v) & 1U) == 0)
                throw std::invalid_argument("adjacency rows are not symmetric");
    return Graph(order, copy);
}

auto Graph::max_degree() const -> int
{
    int best = 0;
    for (int v = 0; v < order_; ++v)
        best = std::max(best, degree(v));
    return best;
}

auto Graph::min_degree() const -> int
{
    int best = order_;
    for (int v = 0; v < order_; ++v)
        best = std::min(best, degree(v));
    return best;
}

auto Graph::degrees() const -> std::vector<int>
{
    std::vector<int> result(static_cast<std::size_t>(order_));
    for (int v = 0; v < order_; ++v)
        result[static_cast<std::size_t>(v)] = degree(v);
    return result;
}

auto Graph::degree_class(int d) const -> VertexSet
{
    std::uint64_t bits = 0;
    for (int v = 0; v < order_; ++v)
        if (degree(v) == d)
            bits |= std::uint64_t{1} << v;
    return VertexSet(bits);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(static_cast<std::size_t>(edges_));
    for (int a = 0; a < order_; ++a)
        for (int b : VertexSet(row(a) & ~((std::uint64_t{2} << a) - 1)))
            result.emplace_back(a, b);
    return result;
}

auto Graph::operator==(const Graph &other) const -> bool
{
    return order_ == other.order_ &&
           std::equal(rows_.begin(), rows_.begin() + order_, other.rows_.begin());
}

auto complement(const Graph &g) -> Graph
{
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
    auto all = g.vertices();
    for (int v = 0; v < g.order(); ++v)
        rows[static_cast<std::size_t>(v)] = (all.without(v) - g.neighbors(v)).bits();
    return Graph::from_rows(g.order(), rows);
}

auto block_counts(const Graph &g, VertexSet s, VertexSet t) -> BlockCount
{
    if (!s.subset_of(g.vertices()) || !t.subset_of(g.vertices()))
        throw std::invalid_argument("block_counts: vertex set leaves the vertex range");
    BlockCount result;
    if (s == t) {
        long long twice = 0;
        for (int v : s)
            twice += (g.neighbors(v) & s).size();
        result.edges = twice / 2;
        result.non_edges = binomial2(s.size()) - result.edges;
        return result;
    }
    if (!s.disjoint(t))
        throw std::invalid_argument("block_counts: distinct vertex sets must be disjoint");
    for (int v : s)
        result.edges += (g.neighbors(v) & t).size();
    result.non_edges = static_cast<long long>(s.size()) * t.size() - result.edges;
    return result;
}

auto degree_sequence(const Graph &g) -> std::vector<int>
{
    auto degrees = g.degrees();
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return degrees;
}

auto largest_repeated_degree(const Graph &g) -> std::optional<int>
{
    std::array<int, kMaxOrder> count{};
    for (int v = 0; v < g.order(); ++v)
        ++count[static_cast<std::size_t>(g.degree(v))];
    for (int d = g.order() - 1; d >= 0; --d)
        if (count[static_cast<std::size_t>(d)] >= 2)
            return d;
    return std::nullopt;
}

auto relabel(const Graph &g, std::span<const int> perm) -> Graph
{
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("relabel: permutation length differs from graph order");
    std::uint64_t seen = 0;
    for (int image : perm) {
        if (image < 0 || image >= g.order() || ((seen >> image) & 1U))
            throw std::invalid_argument("relabel: not a permutation");
        seen |= std::uint64_t{1} << image;
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    return Graph::from_edges(g.order(), edges);
}

auto complete_bipartite(int a, int b) -> Graph
{
    if (a < 1 || b < 1 || a + b > kMaxOrder)
        throw std::invalid_argument("complete_bipartite: need a, b >= 1 and a + b <= 64");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(a + b, edges);
}

auto half_graph(int n) -> Graph
{
    if (n < 1 || 2 * n > kMaxOrder)
        throw std::invalid_argument("half_graph: need 1 <= n <= 32");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            edges.emplace_back(i, n + j);
    return Graph::from_edges(2 * n, edges);
}

auto path_graph(int order) -> Graph
{
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < order; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(order, edges);
}

auto cycle_graph(int order) -> Graph
{
    if (order < 3)
        throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < order; ++v)
        edges.emplace_back(v, (v + 1) % order);
    return Graph::from_edges(order, edges);
}

auto complete_graph(int order) -> Graph
{
    return complement(empty_graph(order));
}

auto empty_graph(int order) -> Graph
{
    return Graph::from_edges(order, std::span<const Edge>{});
}

auto star_graph(int leaves) -> Graph
{
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

auto is_complete_bipartite(const Graph &g, int a, int b) -> bool
{
    if (a < 1 || b < 1 || g.order() != a + b ||
        static_cast<long long>(g.edge_count()) != static_cast<long long>(a) * b)
        return false;
    auto y = g.neighbors(0);
    auto x = g.vertices() - y;
    if (!((x.size() == a && y.size() == b) || (x.size() == b && y.size() == a)))
        return false;
    // With |X||Y| edges and both sides independent, every cross pair is an edge.
    for (int v : x)
        if (!(g.neighbors(v) & x).empty())
            return false;
    for (int v : y)
        if (!(g.neighbors(v) & y).empty())
            return false;
    return true;
}

} // namespace eqdeg
