#include "eqdeg/lambda.hpp"

#include "eqdeg/detector.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace eqdeg {

namespace {

auto describe(const LambdaInstance &inst) -> std::string
{
    return "(n=" + std::to_string(inst.n) + ", delta=" + std::to_string(inst.delta) +
           ", beta=" + std::to_string(inst.beta) + ", |B|=" + std::to_string(inst.b_size) + ")";
}

auto require_domain(const LambdaInstance &inst) -> void
{
    if (!in_standing_domain(inst))
        throw std::invalid_argument("lambda instance outside the standing domain " + describe(inst));
}

// lo + (lo+1) + ... + hi, zero when empty.
auto range_sum(long long lo, long long hi) -> long long
{
    if (hi < lo)
        return 0;
    return (lo + hi) * (hi - lo + 1) / 2;
}

auto binomial(long long m, long long k) -> double
{
    if (k < 0 || k > m)
        return 0;
    double r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * static_cast<double>(m - k + i) / static_cast<double>(i);
    return r;
}

} // namespace

auto in_standing_domain(const LambdaInstance &inst) -> bool
{
    const auto &[n, delta, beta, b] = inst;
    return n >= 6 && delta >= n + 3 && beta >= 3 && beta <= delta - 2 && b >= 2 * n - delta + 2 && b <= delta &&
           inst.distinct_count() >= 0 && inst.free_count() >= 0;
}

auto lambda_case(const LambdaInstance &inst) -> LambdaCase
{
    require_domain(inst);
    if (inst.b_size <= inst.beta)
        return LambdaCase::small_b;
    if (inst.delta + inst.b_size - 2 * inst.n >= inst.beta)
        return LambdaCase::top_window;
    return LambdaCase::split_window;
}

auto lambda_closed(const LambdaInstance &inst) -> long long
{
    const long long n = inst.n;
    const long long delta = inst.delta;
    const long long beta = inst.beta;
    const long long b = inst.b_size;
    switch (lambda_case(inst)) {
    case LambdaCase::small_b:
        return range_sum(b, delta - 1) + (2 * n - 1 - delta) * beta;
    case LambdaCase::top_window:
        return range_sum(delta + b - 2 * n + 1, delta - 1);
    case LambdaCase::split_window:
        return range_sum(beta + 1, delta - 1) + (2 * n - b - delta + beta) * beta;
    }
    return 0;
}

auto lambda_bruteforce(const LambdaInstance &inst) -> long long
{
    require_domain(inst);
    const int beta = inst.beta;
    const int high_count = inst.delta - 1 - beta; // values beta+1 .. delta-1
    if (high_count > 24)
        throw std::invalid_argument("lambda_bruteforce: instance too wide to enumerate " + describe(inst));
    const int distinct = inst.distinct_count();
    const int free = inst.free_count();

    long long best = std::numeric_limits<long long>::min();
    for (std::uint32_t used = 0; used < (1U << high_count); ++used) {
        int taken = std::popcount(used);
        long long used_sum = 0;
        for (auto rest = used; rest != 0; rest &= rest - 1)
            used_sum += beta + 1 + std::countr_zero(rest);
        // `in_first` of the used high values go to the distinct sequence.
        for (int in_first = 0; in_first <= std::min(taken, distinct); ++in_first) {
            int in_second = taken - in_first;
            if (in_second > free)
                continue;
            int low_first = distinct - in_first; // distinct values from 1..beta
            if (low_first > beta)
                continue;
            long long total = used_sum + range_sum(beta - low_first + 1, beta) +
                              static_cast<long long>(free - in_second) * beta;
            best = std::max(best, total);
        }
    }
    if (best == std::numeric_limits<long long>::min())
        throw std::logic_error("lambda_bruteforce: no admissible configuration " + describe(inst));
    return best;
}

auto lambda_naive(const LambdaInstance &inst, long long limit) -> NaiveLambda
{
    require_domain(inst);
    const int delta = inst.delta;
    const int beta = inst.beta;
    const int distinct = inst.distinct_count();
    const int free = inst.free_count();
    if (binomial(delta - 1, distinct) * binomial(delta - 1 + free, free) > static_cast<double>(limit))
        throw std::invalid_argument("lambda_naive: instance too large " + describe(inst));

    // First sequence: all `distinct`-subsets of 1..delta-1 as bitmasks over values.
    std::vector<std::uint64_t> firsts;
    std::vector<long long> first_sums;
    {
        std::vector<int> pick;
        auto rec = [&](auto &self, int next, std::uint64_t mask, long long sum) -> void {
            if (static_cast<int>(pick.size()) == distinct) {
                firsts.push_back(mask);
                first_sums.push_back(sum);
                return;
            }
            for (int value = next; value <= delta - 1; ++value) {
                pick.push_back(value);
                self(self, value + 1, mask | (std::uint64_t{1} << value), sum + value);
                pick.pop_back();
            }
        };
        rec(rec, 1, 0, 0);
    }
    const std::uint64_t above_beta = ~((std::uint64_t{2} << beta) - 1);

    NaiveLambda result;
    result.value = std::numeric_limits<long long>::min();
    // Second sequence: non-decreasing tuples over 0..delta-1.
    std::vector<int> seq;
    auto rec = [&](auto &self, int next) -> void {
        if (static_cast<int>(seq.size()) == free) {
            std::uint64_t high = 0;
            bool repeated = false;
            long long sum = 0;
            for (int value : seq) {
                sum += value;
                if (value > beta) {
                    auto bit = std::uint64_t{1} << value;
                    repeated = repeated || (high & bit) != 0;
                    high |= bit;
                }
            }
            for (std::size_t i = 0; i < firsts.size(); ++i) {
                ++result.configurations;
                if (repeated || (firsts[i] & high & above_beta) != 0)
                    continue;
                long long total = sum + first_sums[i];
                int smallest = seq.empty() ? std::numeric_limits<int>::max() : seq.front();
                if (total > result.value) {
                    result.value = total;
                    result.min_free_entry_at_optimum = seq.empty() ? std::nullopt : std::optional<int>(smallest);
                } else if (total == result.value && !seq.empty()) {
                    result.min_free_entry_at_optimum = std::min(*result.min_free_entry_at_optimum, smallest);
                }
            }
            return;
        }
        for (int value = next; value <= delta - 1; ++value) {
            seq.push_back(value);
            self(self, value);
            seq.pop_back();
        }
    };
    rec(rec, 0);
    if (result.value == std::numeric_limits<long long>::min())
        throw std::logic_error("lambda_naive: no admissible configuration " + describe(inst));
    return result;
}

auto lambda_grid(int n_lo, int n_hi) -> std::vector<LambdaInstance>
{
    std::vector<LambdaInstance> grid;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int delta = n + 3; delta <= 2 * n - 1; ++delta)
            for (int beta = 3; beta <= delta - 2; ++beta)
                for (int b = 2 * n - delta + 2; b <= delta; ++b) {
                    LambdaInstance inst{n, delta, beta, b};
                    if (in_standing_domain(inst))
                        grid.push_back(inst);
                }
    return grid;
}

auto neighborhood_split(const Graph &g, int v0) -> NeighborhoodSplit
{
    if (g.order() % 2 != 0)
        throw std::invalid_argument("neighborhood_split: the graph must have an even order");
    if (v0 < 0 || v0 >= g.order())
        throw std::invalid_argument("neighborhood_split: vertex out of range");
    const int delta = g.max_degree();
    if (g.degree(v0) != delta)
        throw std::invalid_argument("neighborhood_split: v0 must have maximum degree");
    const int n = g.order() / 2;

    NeighborhoodSplit split;
    split.threshold = 2 * n - delta + 2;
    for (int w : g.neighbors(v0)) {
        if (g.degree(w) >= split.threshold)
            split.high = split.high.with(w);
        else
            split.low = split.low.with(w);
    }
    auto beta = largest_repeated_degree(g);
    split.bound_applies = beta && *beta <= delta - 2 && delta >= n + 3 && !has_equal_degree_path3(g);
    if (split.bound_applies)
        split.bound_holds = split.low.size() >= split.threshold;
    return split;
}

} // namespace eqdeg
