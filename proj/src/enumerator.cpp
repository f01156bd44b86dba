#include "eqdeg/enumerator.hpp"

#include "canonizer.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace eqdeg {

using detail::Canonizer;
using detail::DenseGraph;

struct GraphEnumerator::Roots {
    int level = 1;
    std::vector<DenseGraph> graphs;
    std::vector<int> edges;
};

namespace {

auto to_graph(const DenseGraph &g) -> Graph
{
    std::array<std::uint64_t, detail::kCanonMax> rows{};
    for (int v = 0; v < g.n; ++v)
        rows[static_cast<std::size_t>(v)] = g.rows[static_cast<std::size_t>(v)];
    return Graph::from_rows(g.n, std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(g.n)));
}

// Marks, for each neighbourhood subset of the parent, whether it is the least
// member of its orbit under the parent's automorphism group.
class SubsetOrbits {
public:
    auto compute(int k, const std::vector<detail::Perm> &generators) -> void
    {
        std::size_t size = std::size_t{1} << k;
        trivial_ = generators.empty();
        if (trivial_)
            return;
        parent_.resize(size);
        for (std::size_t s = 0; s < size; ++s)
            parent_[s] = static_cast<std::uint16_t>(s);
        std::array<std::uint32_t, detail::kCanonMax> image{};
        for (const auto &gen : generators) {
            for (int v = 0; v < k; ++v)
                image[static_cast<std::size_t>(v)] = 1U << gen[static_cast<std::size_t>(v)];
            for (std::size_t s = 1; s < size; ++s) {
                std::uint32_t mapped = 0;
                for (auto rest = static_cast<std::uint32_t>(s); rest != 0; rest &= rest - 1)
                    mapped |= image[static_cast<std::size_t>(std::countr_zero(rest))];
                unite(static_cast<std::uint32_t>(s), mapped);
            }
        }
    }

    auto is_least(std::uint32_t s) const -> bool { return trivial_ || find(s) == s; }

private:
    auto find(std::uint32_t s) const -> std::uint32_t
    {
        while (parent_[s] != s) {
            parent_[s] = parent_[parent_[s]];
            s = parent_[s];
        }
        return s;
    }

    auto unite(std::uint32_t a, std::uint32_t b) -> void
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b);
        parent_[b] = static_cast<std::uint16_t>(a);
    }

    bool trivial_ = true;
    mutable std::vector<std::uint16_t> parent_;
};

class Expander {
public:
    using Sink = std::function<void(const DenseGraph &, int)>;

    Expander(int final_order, int min_edges, int max_edges, int stop_level, const Sink &sink)
        : final_order_(final_order), min_edges_(min_edges), max_edges_(max_edges), stop_level_(stop_level),
          sink_(sink)
    {
    }

    auto expand(const DenseGraph &g, int edges) -> void
    {
        int k = g.n;
        if (k == stop_level_) {
            sink_(g, edges);
            return;
        }

        // Most edges still addable after the next vertex joins.
        int later = 0;
        for (int j = k + 1; j < final_order_; ++j)
            later += j;

        std::array<int, detail::kCanonMax> degree{};
        std::array<std::uint32_t, detail::kCanonMax + 2> with_degree{};
        for (int v = 0; v < k; ++v) {
            degree[static_cast<std::size_t>(v)] = std::popcount(g.rows[static_cast<std::size_t>(v)]);
            with_degree[static_cast<std::size_t>(degree[static_cast<std::size_t>(v)])] |= 1U << v;
        }
        // at_least[d]: vertices of degree >= d
        std::array<std::uint32_t, detail::kCanonMax + 2> at_least{};
        for (int d = k; d >= 0; --d)
            at_least[static_cast<std::size_t>(d)] =
                at_least[static_cast<std::size_t>(d + 1)] | with_degree[static_cast<std::size_t>(d)];

        auto &orbits = subsets_[static_cast<std::size_t>(k)];
        parent_canon_.run(g);
        orbits.compute(k, parent_canon_.generators());

        DenseGraph child = g;
        child.n = k + 1;
        std::uint32_t full = (1U << k) - 1U;
        for (std::uint32_t s = 0; s <= full; ++s) {
            int size = std::popcount(s);
            if (edges + size > max_edges_ || edges + size + later < min_edges_)
                continue;
            // The new vertex must reach the maximum degree of the child.
            if (at_least[static_cast<std::size_t>(size + 1)] != 0 ||
                (s & with_degree[static_cast<std::size_t>(size)]) != 0)
                continue;
            if (!orbits.is_least(s))
                continue;

            for (int v = 0; v < k; ++v)
                child.rows[static_cast<std::size_t>(v)] = g.rows[static_cast<std::size_t>(v)] | (((s >> v) & 1U) << k);
            child.rows[static_cast<std::size_t>(k)] = s;

            if (accept(child, s, size, degree))
                expand(child, edges + size);
        }
    }

private:
    auto accept(const DenseGraph &child, std::uint32_t s, int size, const std::array<int, detail::kCanonMax> &degree)
        -> bool
    {
        int k = child.n - 1;
        std::array<int, detail::kCanonMax> dchild{};
        std::uint32_t top = 1U << k;
        for (int v = 0; v < k; ++v) {
            dchild[static_cast<std::size_t>(v)] = degree[static_cast<std::size_t>(v)] + static_cast<int>((s >> v) & 1U);
            if (dchild[static_cast<std::size_t>(v)] == size)
                top |= 1U << v;
        }
        dchild[static_cast<std::size_t>(k)] = size;
        if (top == (1U << k))
            return true;

        // Second key: sum of neighbour degrees, over the maximum-degree vertices.
        int best = -1;
        std::uint32_t tied = 0;
        for (auto rest = top; rest != 0; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            int sum = 0;
            for (auto nb = child.rows[static_cast<std::size_t>(w)]; nb != 0; nb &= nb - 1)
                sum += dchild[static_cast<std::size_t>(std::countr_zero(nb))];
            if (sum > best) {
                best = sum;
                tied = 1U << w;
            } else if (sum == best) {
                tied |= 1U << w;
            }
        }
        if ((tied & (1U << k)) == 0)
            return false;
        if (tied == (1U << k))
            return true;

        child_canon_.run(child);
        const auto &lab = child_canon_.labeling();
        int chosen = -1;
        for (int pos = 0; pos <= k; ++pos) {
            int v = lab[static_cast<std::size_t>(pos)];
            if ((tied >> v) & 1U) {
                chosen = v;
                break;
            }
        }
        return child_canon_.orbit(chosen) == child_canon_.orbit(k);
    }

    int final_order_;
    int min_edges_;
    int max_edges_;
    int stop_level_;
    const Sink &sink_;
    Canonizer parent_canon_;
    Canonizer child_canon_;
    std::array<SubsetOrbits, detail::kCanonMax + 1> subsets_{};
};

auto max_pairs(int order) -> int
{
    return order * (order - 1) / 2;
}

auto root_level(int order) -> int
{
    return std::max(1, order - 3);
}

} // namespace

GraphEnumerator::GraphEnumerator(EnumerationOptions options) : options_(options), roots_(std::make_unique<Roots>())
{
    if (options_.order < 1 || options_.order > kMaxEnumerationOrder)
        throw std::invalid_argument("enumeration supports 1.." + std::to_string(kMaxEnumerationOrder) +
                                    " vertices, got " + std::to_string(options_.order));
    if (options_.max_edges < 0 || options_.max_edges > max_pairs(options_.order))
        options_.max_edges = max_pairs(options_.order);
    if (options_.min_edges < 0)
        throw std::invalid_argument("minimum edge count must be non-negative");
    if (options_.jobs < 1)
        throw std::invalid_argument("worker count must be at least 1");

    roots_->level = root_level(options_.order);
    Expander::Sink collect = [this](const DenseGraph &g, int edges) {
        roots_->graphs.push_back(g);
        roots_->edges.push_back(edges);
    };
    Expander expander(options_.order, options_.min_edges, options_.max_edges, roots_->level, collect);
    DenseGraph single;
    single.n = 1;
    if (options_.min_edges <= options_.max_edges)
        expander.expand(single, 0);
}

GraphEnumerator::~GraphEnumerator() = default;
GraphEnumerator::GraphEnumerator(GraphEnumerator &&) noexcept = default;
auto GraphEnumerator::operator=(GraphEnumerator &&) noexcept -> GraphEnumerator & = default;

auto GraphEnumerator::task_count() const -> std::size_t
{
    return roots_->graphs.size();
}

auto GraphEnumerator::run_task(std::size_t task, const GraphVisitor &visit) const -> std::uint64_t
{
    std::uint64_t count = 0;
    Expander::Sink emit = [&](const DenseGraph &g, int edges) {
        if (edges < options_.min_edges || edges > options_.max_edges)
            return;
        ++count;
        if (visit)
            visit(to_graph(g));
    };
    Expander expander(options_.order, options_.min_edges, options_.max_edges, options_.order, emit);
    expander.expand(roots_->graphs.at(task), roots_->edges.at(task));
    return count;
}

auto enumerate_graphs(const EnumerationOptions &options, const GraphVisitor &visit) -> std::uint64_t
{
    auto counts = enumerate_reduce<std::uint64_t>(options, [&](std::uint64_t &acc, const Graph &g) {
        ++acc;
        visit(g);
    });
    std::uint64_t total = 0;
    for (auto c : counts)
        total += c;
    return total;
}

auto count_graphs(const EnumerationOptions &options) -> std::uint64_t
{
    GraphEnumerator engine(options);
    std::uint64_t total = 0;
    for (std::size_t t = 0; t < engine.task_count(); ++t)
        total += engine.run_task(t, nullptr);
    return total;
}

} // namespace eqdeg
