#include "eqdeg/canon.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace eqdeg;

TEST_CASE("canonical forms of small named graphs")
{
    auto c4 = cycle_graph(4);
    CHECK(canonical_form(c4) == canonical_form(relabel(c4, std::vector<int>{2, 0, 3, 1})));
    CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(3)));

    // K2 + K3 complemented is K_{2,3}.
    auto k2_k3 = Graph::from_edges(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(canonical_form(complement(k2_k3)) == canonical_form(complete_bipartite(2, 3)));
}

TEST_CASE("isomorphism tests")
{
    auto k23 = complete_bipartite(2, 3);
    CHECK(are_isomorphic(k23, relabel(k23, std::vector<int>{4, 2, 0, 1, 3})));
    CHECK_FALSE(are_isomorphic(k23, cycle_graph(5)));
    CHECK(are_isomorphic(half_graph(2), path_graph(4)));
    CHECK_FALSE(are_isomorphic(path_graph(4), path_graph(5)));
    CHECK_THROWS_AS(canonical_form(empty_graph(12)), std::invalid_argument);
}

TEST_CASE("canonical graph is a relabeling of the input")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int order = 1 + static_cast<int>(rng() % kMaxCanonicalOrder);
        auto g = oracle::random_graph(order, 0.5, rng);
        auto canon = canonical_graph(g);
        CHECK(degree_sequence(canon) == degree_sequence(g));
        CHECK(canonical_form(canon) == canonical_form(g));
        auto h = relabel(g, oracle::random_permutation(order, rng));
        CHECK(canonical_graph(h) == canon);
    }
}

TEST_CASE("canonical forms separate exactly the isomorphism classes up to 6 vertices")
{
    // Compare against the minimum over all relabelings, on every labeled graph.
    for (int order = 1; order <= 6; ++order) {
        std::map<std::uint64_t, std::uint64_t> brute_to_canon;
        std::set<std::uint64_t> canon_seen;
        const std::uint64_t pairs = static_cast<std::uint64_t>(order * (order - 1) / 2);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            auto g = oracle::labeled_graph(order, mask);
            auto brute = oracle::brute_canonical_bits(g);
            auto canon = canonical_form(g).bits;
            auto [it, fresh] = brute_to_canon.emplace(brute, canon);
            if (fresh)
                CHECK(canon_seen.insert(canon).second);
            else
                CHECK(it->second == canon);
        }
        CHECK(canon_seen.size() == brute_to_canon.size());
    }
}

TEST_CASE("automorphism group sizes")
{
    CHECK(automorphism_group_size(complete_graph(5)) == 120);
    CHECK(automorphism_group_size(cycle_graph(6)) == 12);
    CHECK(automorphism_group_size(path_graph(5)) == 2);
    CHECK(automorphism_group_size(complete_bipartite(2, 3)) == 12);
    CHECK(automorphism_group_size(empty_graph(11)) == 39916800);
    CHECK(automorphism_group_size(Graph{}) == 1);
    // Petersen graph
    auto petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                           {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(automorphism_group_size(petersen) == 120);
}
