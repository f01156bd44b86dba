#pragma once

#include "eqdeg/graph.hpp"

#include <optional>
#include <vector>

namespace eqdeg {

/// Parameters of the degree-sum maximisation over the neighbourhood of a
/// maximum-degree vertex in a 2n-vertex graph.
///
/// A sequence (the degrees of the high-degree neighbours) has delta - b_size
/// distinct entries in 1..delta-1; a second sequence (the degrees of the
/// non-neighbours) has 2n-1-delta entries in 0..delta-1; no value above beta
/// may appear twice across both. The objective is the total of all entries.
struct LambdaInstance {
    int n = 0;
    int delta = 0;
    int beta = 0;
    int b_size = 0;

    auto distinct_count() const -> int { return delta - b_size; }
    auto free_count() const -> int { return 2 * n - 1 - delta; }
    auto operator==(const LambdaInstance &) const -> bool = default;
};

/// Which closed form applies:
///   small_b:      b_size <= beta
///   top_window:   b_size > beta and delta + b_size - 2n >= beta
///   split_window: b_size > beta and delta + b_size - 2n <  beta
enum class LambdaCase { small_b = 1, top_window = 2, split_window = 3 };

/// n >= 6, delta >= n+3, 3 <= beta <= delta-2, 2n-delta+2 <= b_size <= delta,
/// and both sequence lengths non-negative.
auto in_standing_domain(const LambdaInstance &inst) -> bool;

/// Throws std::invalid_argument outside the standing domain.
auto lambda_case(const LambdaInstance &inst) -> LambdaCase;
auto lambda_closed(const LambdaInstance &inst) -> long long;

/// Exhaustive search over the reduced space: every subset of the values
/// beta+1..delta-1 (each usable once), split between the two sequences, with
/// the remaining slots given the best admissible low values. Throws when the
/// instance is outside the domain or too wide to enumerate.
auto lambda_bruteforce(const LambdaInstance &inst) -> long long;

struct NaiveLambda {
    long long value = 0;
    /// Smallest entry of the second sequence over all optimal configurations;
    /// empty when that sequence has length zero.
    std::optional<int> min_free_entry_at_optimum;
    long long configurations = 0;
};

/// Every distinct-value set for the first sequence against every multiset for
/// the second, with no reduction at all. Intended for small instances; throws
/// when the product of the two counts exceeds `limit`.
auto lambda_naive(const LambdaInstance &inst, long long limit = 50'000'000) -> NaiveLambda;

/// Full admissible grid for n in [n_lo, n_hi], ordered by (n, delta, beta, b_size).
auto lambda_grid(int n_lo, int n_hi) -> std::vector<LambdaInstance>;

/// Split of N(v0) by degree threshold 2n - delta + 2.
struct NeighborhoodSplit {
    int threshold = 0;
    VertexSet high; // degree >= threshold
    VertexSet low;  // degree <= threshold - 1
    /// Property-free for length 3, beta <= delta-2, delta >= n+3.
    bool bound_applies = false;
    /// |low| >= threshold; meaningful only when bound_applies.
    bool bound_holds = true;
};

/// Requires an even order and d(v0) equal to the maximum degree.
auto neighborhood_split(const Graph &g, int v0) -> NeighborhoodSplit;

} // namespace eqdeg
