#include "eqdeg/detector.hpp"

#include <stdexcept>
#include <string>

namespace eqdeg {

namespace {

auto check_length(int length) -> void
{
    if (length < 1 || length > kMaxPathLength)
        throw std::invalid_argument("path length must be in 1.." + std::to_string(kMaxPathLength) +
                                    ", got " + std::to_string(length));
}

struct DegreeClasses {
    std::array<std::uint64_t, kMaxOrder> of_vertex{};
};

auto degree_classes(const Graph &g) -> DegreeClasses
{
    std::array<std::uint64_t, kMaxOrder> by_degree{};
    for (int v = 0; v < g.order(); ++v)
        by_degree[static_cast<std::size_t>(g.degree(v))] |= std::uint64_t{1} << v;
    DegreeClasses classes;
    for (int v = 0; v < g.order(); ++v)
        classes.of_vertex[static_cast<std::size_t>(v)] = by_degree[static_cast<std::size_t>(g.degree(v))];
    return classes;
}

// Depth-first extension of a simple path; the path is recorded in `path` and
// `used` holds its vertices. At the last step only same-degree neighbors are
// candidates.
struct PathSearch {
    const Graph &g;
    int length;
    std::uint64_t target = 0;
    std::vector<int> path;

    auto extend(int depth, std::uint64_t used) -> bool
    {
        int last = path.back();
        std::uint64_t next = g.row(last) & ~used;
        if (depth + 1 == length)
            next &= target;
        for (int w : VertexSet(next)) {
            path.push_back(w);
            if (depth + 1 == length || extend(depth + 1, used | (std::uint64_t{1} << w)))
                return true;
            path.pop_back();
        }
        return false;
    }
};

} // namespace

auto has_equal_degree_path3(const Graph &g) -> bool
{
    auto classes = degree_classes(g);
    for (int a = 0; a < g.order(); ++a) {
        for (int b : g.neighbors(a)) {
            auto left = g.row(a) & ~(std::uint64_t{1} << b);
            auto right = g.row(b) & ~(std::uint64_t{1} << a);
            // Each degree class met on the left is tested once.
            auto pending = left;
            while (pending != 0) {
                int x = std::countr_zero(pending);
                auto cls = classes.of_vertex[static_cast<std::size_t>(x)];
                auto xs = left & cls;
                auto ys = right & cls;
                pending &= ~cls;
                if (ys != 0 && !(xs == ys && std::popcount(xs) == 1))
                    return true;
            }
        }
    }
    return false;
}

auto find_equal_degree_path3(const Graph &g) -> std::optional<Witness>
{
    auto classes = degree_classes(g);
    for (int x = 0; x < g.order(); ++x) {
        auto same = classes.of_vertex[static_cast<std::size_t>(x)] & ~(std::uint64_t{1} << x);
        if (same == 0)
            continue;
        for (int a : g.neighbors(x)) {
            for (int b : VertexSet(g.row(a) & ~(std::uint64_t{1} << x))) {
                auto ys = g.row(b) & same & ~(std::uint64_t{1} << a);
                if (ys != 0)
                    return Witness{{x, a, b, std::countr_zero(ys)}};
            }
        }
    }
    return std::nullopt;
}

auto find_equal_degree_path(const Graph &g, int length) -> std::optional<Witness>
{
    check_length(length);
    if (length >= g.order())
        return std::nullopt;
    if (length == 3)
        return find_equal_degree_path3(g);
    auto classes = degree_classes(g);
    PathSearch search{g, length, 0, {}};
    search.path.reserve(static_cast<std::size_t>(length) + 1);
    for (int x = 0; x < g.order(); ++x) {
        search.target = classes.of_vertex[static_cast<std::size_t>(x)] & ~(std::uint64_t{1} << x);
        if (search.target == 0)
            continue;
        search.path.assign(1, x);
        if (search.extend(0, std::uint64_t{1} << x))
            return Witness{search.path};
    }
    return std::nullopt;
}

auto has_equal_degree_path(const Graph &g, int length) -> bool
{
    check_length(length);
    if (length >= g.order())
        return false;
    if (length == 3)
        return has_equal_degree_path3(g);
    return find_equal_degree_path(g, length).has_value();
}

auto path3_exists_between(const Graph &g, int u, int v) -> bool
{
    if (u == v)
        throw std::invalid_argument("path3_exists_between: endpoints must differ");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw std::invalid_argument("path3_exists_between: vertex out of range");
    auto ends = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    for (int x : VertexSet(g.row(u) & ~ends))
        if ((g.row(x) & g.row(v) & ~ends) != 0)
            return true;
    return false;
}

auto verify_witness(const Graph &g, const Witness &w) -> bool
{
    if (w.vertices.size() < 2)
        return false;
    std::uint64_t seen = 0;
    for (int v : w.vertices) {
        if (v < 0 || v >= g.order() || ((seen >> v) & 1U))
            return false;
        seen |= std::uint64_t{1} << v;
    }
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        if (!g.adjacent(w.vertices[i], w.vertices[i + 1]))
            return false;
    return g.degree(w.vertices.front()) == g.degree(w.vertices.back());
}

} // namespace eqdeg
