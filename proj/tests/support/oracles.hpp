#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include "eqdeg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace eqdeg::oracle {

/// Lexicographically smallest simple path with `length` edges and equal
/// endpoint degrees, by trying every vertex sequence in lexicographic order.
inline auto smallest_equal_degree_path(const Graph &g, int length) -> std::optional<std::vector<int>>
{
    const int n = g.order();
    if (length + 1 > n)
        return std::nullopt;
    std::vector<int> seq(static_cast<std::size_t>(length + 1), 0);
    // Odometer over all n^(length+1) sequences; lexicographic by construction.
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < seq.size(); ++i)
            for (std::size_t j = 0; ok && j < i; ++j)
                ok = seq[i] != seq[j];
        for (std::size_t i = 1; ok && i < seq.size(); ++i)
            ok = g.adjacent(seq[i - 1], seq[i]);
        if (ok && g.degree(seq.front()) == g.degree(seq.back()))
            return seq;
        int pos = length;
        while (pos >= 0 && ++seq[static_cast<std::size_t>(pos)] == n)
            seq[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0)
            return std::nullopt;
    }
}

/// The labeled graph on `order` vertices whose pair (i, j), i < j, is present
/// iff bit k of `mask` is set, pairs numbered in graph6 order.
inline auto labeled_graph(int order, std::uint64_t mask) -> Graph
{
    std::vector<Edge> edges;
    int k = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U)
                edges.emplace_back(i, j);
    return Graph::from_edges(order, edges);
}

/// Minimum of the pair bit string over all n! relabelings.
inline auto brute_canonical_bits(const Graph &g) -> std::uint64_t
{
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t bits = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits = (bits << 1) | (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1U : 0U);
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Number of unlabeled graphs on n vertices by counting orbits of S_n on
/// edge sets: average over cycle types of 2^(cycles induced on pairs).
inline auto burnside_graph_count(int n) -> unsigned __int128
{
    unsigned __int128 total = 0;
    std::vector<int> parts;
    auto factorial = [](int k) {
        unsigned __int128 f = 1;
        for (int i = 2; i <= k; ++i)
            f *= static_cast<unsigned>(i);
        return f;
    };
    auto visit = [&](auto &self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            // Permutations with this cycle type: n! / prod(part) / prod(multiplicity!)
            unsigned __int128 count = factorial(n);
            std::vector<int> mult(static_cast<std::size_t>(n + 1), 0);
            for (int p : parts) {
                count /= static_cast<unsigned>(p);
                ++mult[static_cast<std::size_t>(p)];
            }
            for (int m : mult)
                count /= factorial(m);
            long long cycles = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                cycles += parts[i] / 2;
                for (std::size_t j = i + 1; j < parts.size(); ++j)
                    cycles += std::gcd(parts[i], parts[j]);
            }
            total += count * (static_cast<unsigned __int128>(1) << cycles);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    visit(visit, n, n);
    return total / factorial(n);
}

inline auto random_graph(int order, double density, std::mt19937_64 &rng) -> Graph
{
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            if (coin(rng))
                edges.emplace_back(i, j);
    return Graph::from_edges(order, edges);
}

inline auto random_permutation(int order, std::mt19937_64 &rng) -> std::vector<int>
{
    std::vector<int> perm(static_cast<std::size_t>(order));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace eqdeg::oracle
