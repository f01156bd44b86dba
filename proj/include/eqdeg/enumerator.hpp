#pragma once

#include "eqdeg/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace eqdeg {

inline constexpr int kMaxEnumerationOrder = 11;

struct EnumerationOptions {
    int order = 1;
    int min_edges = 0;
    /// Negative means no upper bound.
    int max_edges = -1;
    int jobs = 1;
};

using GraphVisitor = std::function<void(const Graph &)>;

/// Canonical augmentation by vertex addition. A child G + v is kept iff v lies
/// in the automorphism orbit selected by the canonical deletion rule (maximum
/// degree, then maximum neighbour-degree sum, then first in canonical order),
/// and its neighbourhood is the least in its orbit under Aut(G). The search is
/// cut into subtrees rooted a few levels above the target order; subtrees are
/// independent units of work.
class GraphEnumerator {
public:
    explicit GraphEnumerator(EnumerationOptions options);
    ~GraphEnumerator();
    GraphEnumerator(GraphEnumerator &&) noexcept;
    auto operator=(GraphEnumerator &&) noexcept -> GraphEnumerator &;

    auto options() const -> const EnumerationOptions & { return options_; }
    auto task_count() const -> std::size_t;
    /// Visits every class in one subtree, in a fixed order.
    auto run_task(std::size_t task, const GraphVisitor &visit) const -> std::uint64_t;

private:
    struct Roots;
    EnumerationOptions options_;
    std::unique_ptr<Roots> roots_;
};

/// One representative per isomorphism class of graphs with the requested
/// order and edge count in range; returns the number visited. With jobs > 1
/// the visitor runs concurrently on worker threads and must be thread-safe.
/// Throws std::invalid_argument outside 1..11 vertices or on a bad range.
auto enumerate_graphs(const EnumerationOptions &options, const GraphVisitor &visit) -> std::uint64_t;

/// Number of classes, without materialising graphs for a visitor.
auto count_graphs(const EnumerationOptions &options) -> std::uint64_t;

/// Buffered parallel mode: one accumulator per subtree, each filled by a
/// single worker, returned in subtree order so any ordered fold over them is
/// independent of the worker count.
template <typename Acc, typename Visit>
auto enumerate_reduce(const EnumerationOptions &options, Visit visit) -> std::vector<Acc>
{
    GraphEnumerator engine(options);
    std::vector<Acc> results(engine.task_count());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        try {
            for (auto task = next.fetch_add(1); task < results.size(); task = next.fetch_add(1)) {
                auto &acc = results[task];
                engine.run_task(task, [&](const Graph &g) { visit(acc, g); });
            }
        } catch (...) {
            std::lock_guard lock(failure_lock);
            if (!failure)
                failure = std::current_exception();
            next = results.size();
        }
    };
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < jobs; ++i)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace eqdeg
