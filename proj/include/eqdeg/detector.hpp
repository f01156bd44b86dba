#pragma once

#include "eqdeg/graph.hpp"

#include <optional>
#include <vector>

namespace eqdeg {

inline constexpr int kMaxPathLength = 8;

/// A simple path whose two endpoints have the same degree in the graph it
/// was found in.
struct Witness {
    std::vector<int> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }
    auto operator<=>(const Witness &) const = default;
};

/// Boolean form of the length-3 search: for every ordered edge (a, b),
/// compares the degree classes of N(a)-b and N(b)-a. O(edges x distinct degrees).
auto has_equal_degree_path3(const Graph &g) -> bool;

/// Lexicographically smallest length-3 witness, if any.
auto find_equal_degree_path3(const Graph &g) -> std::optional<Witness>;

/// Lexicographically smallest witness of the given length (1..8), if any.
/// Lengths of at least the order have no simple path and yield nothing.
auto find_equal_degree_path(const Graph &g, int length) -> std::optional<Witness>;

/// Boolean form of find_equal_degree_path; dispatches to the length-3 test.
auto has_equal_degree_path(const Graph &g, int length) -> bool;

/// Simple path u - x - y - v with x, y outside {u, v}. Throws when u == v.
auto path3_exists_between(const Graph &g, int u, int v) -> bool;

/// Length-agnostic: checks adjacency of consecutive vertices, distinctness and
/// equal endpoint degrees.
auto verify_witness(const Graph &g, const Witness &w) -> bool;

} // namespace eqdeg
