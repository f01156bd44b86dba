#pragma once

#include "eqdeg/graph.hpp"

#include <compare>
#include <cstdint>

namespace eqdeg {

/// Largest order with exact canonical forms: the upper triangle must fit one
/// 64-bit word.
inline constexpr int kMaxCanonicalOrder = 11;

/// Upper-triangle bit string of the canonically relabeled graph, stored in
/// graph6 bit order with the first pair in the most significant used bit.
/// Equal exactly for isomorphic graphs of the same order.
struct CanonicalForm {
    int order = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalForm &) const = default;
};

/// Minimum adjacency string over the leaves of a degree-refined
/// individualisation tree. Throws std::invalid_argument above order 11.
auto canonical_form(const Graph &g) -> CanonicalForm;

/// The canonical representative itself.
auto canonical_graph(const Graph &g) -> Graph;

auto are_isomorphic(const Graph &g, const Graph &h) -> bool;

/// Size of the automorphism group (order <= 11), by orbit-stabiliser over
/// the generators found during canonical labelling.
auto automorphism_group_size(const Graph &g) -> std::uint64_t;

} // namespace eqdeg
