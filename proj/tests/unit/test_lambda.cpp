#include "eqdeg/detector.hpp"
#include "eqdeg/enumerator.hpp"
#include "eqdeg/lambda.hpp"

#include <doctest.h>

using namespace eqdeg;

TEST_CASE("closed forms in each case")
{
    LambdaInstance small{6, 9, 7, 5};
    CHECK(lambda_case(small) == LambdaCase::small_b);
    CHECK(lambda_closed(small) == 40);

    LambdaInstance top{6, 9, 4, 7};
    CHECK(lambda_case(top) == LambdaCase::top_window);
    CHECK(lambda_closed(top) == 26);

    LambdaInstance split{6, 9, 5, 6};
    CHECK(lambda_case(split) == LambdaCase::split_window);
    CHECK(lambda_closed(split) == 31);
}

TEST_CASE("exhaustive maximum")
{
    CHECK(lambda_bruteforce({6, 11, 5, 11}) == 0);
    CHECK(lambda_bruteforce({6, 9, 7, 5}) == 40);
    CHECK(lambda_bruteforce({6, 9, 4, 7}) == 26);
    CHECK(lambda_bruteforce({6, 9, 5, 6}) == 31);
    CHECK(lambda_naive({6, 9, 7, 5}).value == 40);
}

TEST_CASE("instances outside the standing domain are rejected")
{
    CHECK_THROWS_AS(lambda_closed({5, 9, 4, 6}), std::invalid_argument);  // n < 6
    CHECK_THROWS_AS(lambda_closed({6, 8, 4, 6}), std::invalid_argument);  // delta < n+3
    CHECK_THROWS_AS(lambda_closed({6, 9, 2, 6}), std::invalid_argument);  // beta < 3
    CHECK_THROWS_AS(lambda_closed({6, 9, 8, 6}), std::invalid_argument);  // beta > delta-2
    CHECK_THROWS_AS(lambda_closed({6, 9, 5, 4}), std::invalid_argument);  // |B| < 2n-delta+2
    CHECK_THROWS_AS(lambda_closed({6, 9, 5, 10}), std::invalid_argument); // |B| > delta
    CHECK_THROWS_AS(lambda_bruteforce({6, 12, 5, 8}), std::invalid_argument); // delta > 2n-1
}

TEST_CASE("closed form, reduced search and naive search agree on the full grid for n = 6..8")
{
    auto grid = lambda_grid(6, 8);
    CHECK(grid.size() > 300);
    for (const auto &inst : grid) {
        CAPTURE(inst.n);
        CAPTURE(inst.delta);
        CAPTURE(inst.beta);
        CAPTURE(inst.b_size);
        auto closed = lambda_closed(inst);
        CHECK(closed == lambda_bruteforce(inst));
        auto naive = lambda_naive(inst);
        CHECK(naive.value == closed);
        // The free entries of every optimum are at least beta.
        if (naive.min_free_entry_at_optimum)
            CHECK(*naive.min_free_entry_at_optimum >= inst.beta);
    }
}

TEST_CASE("the three case conditions partition the domain")
{
    for (const auto &inst : lambda_grid(6, 12)) {
        int b = inst.b_size;
        int hits = (b <= inst.beta) + (b >= inst.beta + 1 && inst.delta + b - 2 * inst.n >= inst.beta) +
                   (b >= inst.beta + 1 && inst.delta + b - 2 * inst.n <= inst.beta - 1);
        CHECK(hits == 1);
    }
}

TEST_CASE("small |B| values never increase with |B|")
{
    for (const auto &inst : lambda_grid(6, 12)) {
        LambdaInstance next = inst;
        ++next.b_size;
        if (lambda_case(inst) == LambdaCase::small_b && in_standing_domain(next) &&
            lambda_case(next) == LambdaCase::small_b)
            CHECK(lambda_closed(next) <= lambda_closed(inst));
    }
}

TEST_CASE("neighbourhood split of a maximum-degree vertex")
{
    auto star = neighborhood_split(star_graph(5), 0);
    CHECK(star.threshold == 3);
    CHECK(star.high.empty());
    CHECK(star.low == VertexSet{1, 2, 3, 4, 5});

    auto k35 = complete_bipartite(3, 5);
    auto split = neighborhood_split(k35, 0);
    CHECK(split.threshold == 5);
    CHECK(split.high.empty());
    CHECK(split.low == k35.neighbors(0));

    auto half = half_graph(3);
    auto h = neighborhood_split(half, 0);
    CHECK(h.threshold == 5);
    CHECK(h.high.empty());
    CHECK(h.low == half.neighbors(0));

    CHECK_THROWS_AS(neighborhood_split(complete_bipartite(2, 3), 0), std::invalid_argument); // odd order
    CHECK_THROWS_AS(neighborhood_split(star_graph(5), 1), std::invalid_argument);            // not maximum
}

TEST_CASE("the split is a partition and its size bound holds on every graph up to 8 vertices")
{
    int applied = 0;
    for (int order : {4, 6, 8}) {
        enumerate_graphs({order}, [&](const Graph &g) {
            int delta = g.max_degree();
            for (int v0 : g.degree_class(delta)) {
                auto s = neighborhood_split(g, v0);
                CHECK((s.high | s.low) == g.neighbors(v0));
                CHECK(s.high.disjoint(s.low));
                if (s.bound_applies) {
                    ++applied;
                    CHECK(s.bound_holds);
                }
            }
        });
    }
    CHECK(applied > 0);
}
