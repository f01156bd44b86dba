// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "eqdeg/canon.hpp"
#include "eqdeg/detector.hpp"
#include "eqdeg/enumerator.hpp"
#include "eqdeg/graph6.hpp"
#include "eqdeg/lambda.hpp"
#include "eqdeg/search.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>

using namespace eqdeg;

namespace {

int jobs()
{
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    auto expect(bool ok, const std::string &what) -> void
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

auto criterion(int id, const std::string &title, const std::function<void(Outcome &)> &body) -> void
{
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        body(o);
    } catch (const std::exception &e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass)
        ++failures;
    std::printf("%s %d %s:%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.str().c_str(), secs);
    std::fflush(stdout);
}

auto theorem(Outcome &o, int order, int p, const Graph &expected) -> void
{
    auto t = verify_theorem(order, jobs());
    o.expect(t.holds(), "theorem check at v=" + std::to_string(order));
    o.expect(t.result.p == p, "p at v=" + std::to_string(order));
    o.expect(t.result.extremal.size() == 1 && are_isomorphic(from_graph6(t.result.extremal[0]), expected),
             "extremal graph at v=" + std::to_string(order));
    o.detail << " v=" << order << " p=" << (t.result.p ? std::to_string(*t.result.p) : "none");
}

/// Length-3 check on a dense matrix of any size, for graphs beyond the
/// 64-vertex word graphs.
struct WideGraph {
    int order = 0;
    int words = 0;
    std::vector<std::uint64_t> rows;

    WideGraph(int n) : order(n), words((n + 63) / 64), rows(static_cast<std::size_t>(n * words), 0) {}

    auto row(int v) -> std::uint64_t * { return rows.data() + static_cast<std::ptrdiff_t>(v) * words; }
    auto row(int v) const -> const std::uint64_t * { return rows.data() + static_cast<std::ptrdiff_t>(v) * words; }
    auto add(int a, int b) -> void
    {
        row(a)[b / 64] |= std::uint64_t{1} << (b % 64);
        row(b)[a / 64] |= std::uint64_t{1} << (a % 64);
    }
    auto adjacent(int a, int b) const -> bool { return (row(a)[b / 64] >> (b % 64)) & 1U; }
    auto degree(int v) const -> int
    {
        int d = 0;
        for (int w = 0; w < words; ++w)
            d += std::popcount(row(v)[w]);
        return d;
    }

    /// Some u != v of equal degree with u - x - y - v a path.
    auto has_path3() const -> bool
    {
        for (int u = 0; u < order; ++u) {
            for (int v = u + 1; v < order; ++v) {
                if (degree(u) != degree(v))
                    continue;
                for (int x = 0; x < order; ++x) {
                    if (x == v || !adjacent(u, x))
                        continue;
                    for (int w = 0; w < words; ++w) {
                        std::uint64_t y = row(x)[w] & row(v)[w];
                        if (u / 64 == w)
                            y &= ~(std::uint64_t{1} << (u % 64));
                        if (y != 0)
                            return true;
                    }
                }
            }
        }
        return false;
    }
};

auto wide_bipartite(int a, int b) -> WideGraph
{
    WideGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.add(i, a + j);
    return g;
}

auto widen(const Graph &g) -> WideGraph
{
    WideGraph w(g.order());
    for (auto [a, b] : g.edges())
        w.add(a, b);
    return w;
}

} // namespace

int main()
{
    std::printf("acceptance run with %d worker(s)\n", jobs());

    criterion(1, "odd orders: p = n^2+n, unique extremal K_{n,n+1}", [](Outcome &o) {
        theorem(o, 5, 6, complete_bipartite(2, 3));
        theorem(o, 7, 12, complete_bipartite(3, 4));
        theorem(o, 9, 20, complete_bipartite(4, 5));
    });

    criterion(2, "even orders: p = n^2-1, unique extremal K_{n-1,n+1}", [](Outcome &o) {
        theorem(o, 6, 8, complete_bipartite(2, 4));
        theorem(o, 8, 15, complete_bipartite(3, 5));
        theorem(o, 10, 24, complete_bipartite(4, 6));
    });

    criterion(3, "v=9 with at least 21 edges always has the path", [](Outcome &o) {
        SearchOptions options;
        options.order = 9;
        options.min_edges = 21;
        options.jobs = jobs();
        auto r = compute_extremal(options);
        o.expect(!r.p.has_value(), "a path-free graph with >= 21 edges");
        o.expect(r.histogram.empty(), "nonempty histogram");
        o.expect(r.enumerated > 0, "nothing enumerated");
        o.detail << " classes=" << r.enumerated << " exceptions=" << r.histogram.size();
    });

    criterion(4, "certificate sweeps v=5..9: no violations, identities exercised", [](Outcome &o) {
        for (int order = 5; order <= 9; ++order) {
            auto report = certificate_sweep(order, jobs());
            auto tag = " at v=" + std::to_string(order);
            o.expect(report.violation_count() == 0, "violations" + tag);
            o.expect(report.at(kZeroBlocksCheck).instances > 0, "zero-block check vacuous" + tag);
            o.expect(report.at(kComplementCheck).instances > 0, "complement identity vacuous" + tag);
            o.detail << " v=" << order << ":" << report.graphs << "g/" << report.at(kComplementCheck).instances << "p";
        }
    });

    criterion(5, "lambda closed form equals exhaustive maximum on n=6..8", [](Outcome &o) {
        auto grid = lambda_grid(6, 8);
        std::size_t mismatches = 0;
        for (const auto &inst : grid)
            if (lambda_closed(inst) != lambda_bruteforce(inst))
                ++mismatches;
        o.expect(!grid.empty(), "empty grid");
        o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
        o.detail << " instances=" << grid.size();
    });

    criterion(6, "constructions: K_{n,n+1} path-free to n=100, half graphs", [](Outcome &o) {
        for (int n = 1; 2 * n + 1 <= kMaxOrder; ++n) {
            auto g = complete_bipartite(n, n + 1);
            o.expect(!has_equal_degree_path(g, 3), "K_{n,n+1} at n=" + std::to_string(n));
            o.expect(!widen(g).has_path3(), "wide check disagrees at n=" + std::to_string(n));
        }
        // The wide check must also find paths where the detector does.
        for (auto g : {complete_bipartite(2, 2), complete_bipartite(3, 5), path_graph(6), cycle_graph(9)})
            o.expect(widen(g).has_path3() == has_equal_degree_path(g, 3), "wide check calibration");
        for (int n = 32; n <= 100; ++n)
            o.expect(!wide_bipartite(n, n + 1).has_path3(), "K_{n,n+1} at n=" + std::to_string(n));
        for (int n = 1; n <= 5; ++n) {
            auto h = half_graph(n);
            o.expect(h.edge_count() == n * (n + 1) / 2, "half graph edges at n=" + std::to_string(n));
            for (int length : {2, 4})
                o.expect(!has_equal_degree_path(h, length),
                         "half graph at n=" + std::to_string(n) + " length " + std::to_string(length));
        }
    });

    criterion(7, "census v=1..10, labeled cross-check for v<=7", [](Outcome &o) {
        const std::vector<std::uint64_t> census{1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
        for (int order = 1; order <= 10; ++order) {
            auto count = count_graphs({order, 0, -1, jobs()});
            auto want = census[static_cast<std::size_t>(order - 1)];
            o.expect(count == want, "count at v=" + std::to_string(order));
            o.expect(static_cast<std::uint64_t>(oracle::burnside_graph_count(order)) == want,
                     "orbit count at v=" + std::to_string(order));
        }
        for (int order = 1; order <= 7; ++order) {
            const int pairs = order * (order - 1) / 2;
            const std::uint64_t labeled = std::uint64_t{1} << pairs;
            std::vector<CanonicalForm> forms;
            std::mutex lock;
            enumerate_graphs({order, 0, -1, jobs()}, [&](const Graph &g) {
                auto f = canonical_form(g);
                std::lock_guard guard(lock);
                forms.push_back(f);
            });
            std::sort(forms.begin(), forms.end());
            o.expect(std::adjacent_find(forms.begin(), forms.end()) == forms.end(),
                     "duplicate class at v=" + std::to_string(order));

            // Every labeled graph lands in an enumerated class.
            std::set<std::uint64_t> brute;
            std::uint64_t missing = 0;
            for (std::uint64_t mask = 0; mask < labeled; ++mask) {
                auto g = oracle::labeled_graph(order, mask);
                if (!std::binary_search(forms.begin(), forms.end(), canonical_form(g)))
                    ++missing;
                if (order <= 6)
                    brute.insert(oracle::brute_canonical_bits(g));
            }
            o.expect(missing == 0, "labeled graph outside the classes at v=" + std::to_string(order));
            if (order <= 6)
                o.expect(brute.size() == forms.size(), "brute-force class count at v=" + std::to_string(order));

            // Orbit sizes add up to the number of labeled graphs.
            std::uint64_t factorial = 1;
            for (int i = 2; i <= order; ++i)
                factorial *= static_cast<std::uint64_t>(i);
            std::uint64_t orbit_total = 0;
            enumerate_graphs({order}, [&](const Graph &g) { orbit_total += factorial / automorphism_group_size(g); });
            o.expect(orbit_total == labeled, "orbit sizes at v=" + std::to_string(order));
        }
    });

    criterion(8, "detector agrees with exhaustive path search on every class v<=7", [](Outcome &o) {
        std::uint64_t checked = 0;
        for (int order = 1; order <= 7; ++order) {
            enumerate_graphs({order}, [&](const Graph &g) {
                ++checked;
                auto fast = find_equal_degree_path3(g);
                auto slow = oracle::smallest_equal_degree_path(g, 3);
                if (fast.has_value() != slow.has_value() || has_equal_degree_path3(g) != slow.has_value()) {
                    o.expect(false, "answer differs on " + to_graph6(g));
                    return;
                }
                if (fast && !(verify_witness(g, *fast) && fast->length() == 3))
                    o.expect(false, "invalid witness on " + to_graph6(g));
            });
        }
        o.expect(checked == 1 + 2 + 4 + 11 + 34 + 156 + 1044, "class total");
        o.detail << " classes=" << checked;
    });

    std::printf("SKIP 9 general n: not reproducible by finite search; the counting steps are covered by 4 and 5\n");
    return failures == 0 ? 0 : 1;
}
