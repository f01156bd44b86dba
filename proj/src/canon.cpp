#include "eqdeg/canon.hpp"

#include "canonizer.hpp"

#include <stdexcept>
#include <string>

namespace eqdeg {

namespace {

auto to_dense(const Graph &g) -> detail::DenseGraph
{
    if (g.order() > kMaxCanonicalOrder)
        throw std::invalid_argument("canonical labelling supports at most 11 vertices, got " +
                                    std::to_string(g.order()));
    detail::DenseGraph dense;
    dense.n = g.order();
    for (int v = 0; v < g.order(); ++v)
        dense.rows[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.row(v));
    return dense;
}

auto canonizer() -> detail::Canonizer &
{
    thread_local detail::Canonizer instance;
    return instance;
}

} // namespace

auto canonical_form(const Graph &g) -> CanonicalForm
{
    auto dense = to_dense(g);
    auto &c = canonizer();
    c.run(dense);
    return {g.order(), c.form()};
}

auto canonical_graph(const Graph &g) -> Graph
{
    auto dense = to_dense(g);
    auto &c = canonizer();
    c.run(dense);
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    for (int pos = 0; pos < g.order(); ++pos)
        perm[static_cast<std::size_t>(c.labeling()[static_cast<std::size_t>(pos)])] = pos;
    return relabel(g, perm);
}

auto are_isomorphic(const Graph &g, const Graph &h) -> bool
{
    if (g.order() > kMaxCanonicalOrder || h.order() > kMaxCanonicalOrder)
        throw std::invalid_argument("are_isomorphic supports at most 11 vertices");
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    return canonical_form(g) == canonical_form(h);
}

auto automorphism_group_size(const Graph &g) -> std::uint64_t
{
    auto dense = to_dense(g);
    auto &c = canonizer();
    c.run(dense);
    return c.group_size();
}

} // namespace eqdeg
