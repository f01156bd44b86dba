#include "eqdeg/search.hpp"

#include "eqdeg/canon.hpp"
#include "eqdeg/detector.hpp"
#include "eqdeg/enumerator.hpp"
#include "eqdeg/graph6.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace eqdeg {

namespace {

struct Partial {
    int best = -1;
    std::vector<std::string> extremal;
    std::map<int, std::uint64_t> histogram;
    std::uint64_t enumerated = 0;
};

auto validate(const SearchOptions &options) -> void
{
    if (options.order < 1 || options.order > kMaxEnumerationOrder)
        throw std::invalid_argument("search supports 1.." + std::to_string(kMaxEnumerationOrder) + " vertices, got " +
                                    std::to_string(options.order));
    if (options.length < 1 || options.length > kMaxPathLength)
        throw std::invalid_argument("path length must be in 1.." + std::to_string(kMaxPathLength) + ", got " +
                                    std::to_string(options.length));
    if (options.length > 3 && options.order > options.long_path_order_cap)
        throw std::invalid_argument("searches for paths longer than 3 are capped at " +
                                    std::to_string(options.long_path_order_cap) + " vertices");
}

auto elapsed_since(std::chrono::steady_clock::time_point start) -> double
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

auto SearchResult::to_json(bool with_timing, int indent) const -> std::string
{
    nlohmann::ordered_json doc;
    doc["schema"] = "search-result/1";
    doc["v"] = order;
    doc["ell"] = length;
    doc["p"] = p ? nlohmann::ordered_json(*p) : nlohmann::ordered_json(nullptr);
    doc["extremal"] = extremal;
    doc["histogram"] = nlohmann::ordered_json::object();
    for (auto [edges, count] : histogram)
        doc["histogram"][std::to_string(edges)] = count;
    doc["enumerated"] = enumerated;
    doc["seconds"] = with_timing ? nlohmann::ordered_json(seconds) : nlohmann::ordered_json(nullptr);
    return doc.dump(indent);
}

auto compute_extremal(const SearchOptions &options) -> SearchResult
{
    validate(options);
    auto start = std::chrono::steady_clock::now();
    EnumerationOptions enumeration{options.order, options.min_edges, options.max_edges, options.jobs};
    std::atomic<int> shared_best{-1};
    const int length = options.length;
    const bool fast = options.fast;

    auto partials = enumerate_reduce<Partial>(enumeration, [&](Partial &acc, const Graph &g) {
        ++acc.enumerated;
        int e = g.edge_count();
        if (fast && e < shared_best.load(std::memory_order_relaxed))
            return;
        if (has_equal_degree_path(g, length))
            return;
        ++acc.histogram[e];
        if (e > acc.best) {
            acc.best = e;
            acc.extremal.clear();
        }
        if (e == acc.best)
            acc.extremal.push_back(to_graph6(g));
        if (fast) {
            int seen = shared_best.load(std::memory_order_relaxed);
            while (e > seen && !shared_best.compare_exchange_weak(seen, e, std::memory_order_relaxed)) {
            }
        }
    });

    SearchResult result;
    result.order = options.order;
    result.length = length;
    int best = -1;
    for (const auto &part : partials)
        best = std::max(best, part.best);
    for (const auto &part : partials) {
        result.enumerated += part.enumerated;
        for (auto [edges, count] : part.histogram)
            result.histogram[edges] += count;
        if (part.best == best && best >= 0)
            result.extremal.insert(result.extremal.end(), part.extremal.begin(), part.extremal.end());
    }
    std::sort(result.extremal.begin(), result.extremal.end());
    if (best >= 0)
        result.p = best;
    if (fast)
        std::erase_if(result.histogram, [&](const auto &entry) { return entry.first < best; });
    result.seconds = elapsed_since(start);
    return result;
}

auto compute_extremal(int order, int length, int jobs) -> SearchResult
{
    SearchOptions options;
    options.order = order;
    options.length = length;
    options.jobs = jobs;
    return compute_extremal(options);
}

auto verify_theorem(int order, int jobs) -> TheoremCheck
{
    if (order < 5 || order > kMaxEnumerationOrder)
        throw std::invalid_argument("verify_theorem supports 5.." + std::to_string(kMaxEnumerationOrder) +
                                    " vertices, got " + std::to_string(order));
    TheoremCheck check;
    check.order = order;
    check.n = order / 2;
    const int n = check.n;
    Graph expected = order % 2 == 1 ? complete_bipartite(n, n + 1) : complete_bipartite(n - 1, n + 1);
    check.expected_p = order % 2 == 1 ? n * n + n : n * n - 1;
    check.expected_graph6 = to_graph6(expected);

    SearchOptions options;
    options.order = order;
    options.length = 3;
    options.jobs = jobs;
    options.fast = true;
    check.result = compute_extremal(options);

    const auto &r = check.result;
    check.p_matches = r.p == check.expected_p;
    check.unique_extremal = r.extremal.size() == 1 && are_isomorphic(from_graph6(r.extremal.front()), expected);
    check.nothing_above = r.histogram.empty() || r.histogram.rbegin()->first <= check.expected_p;
    return check;
}

auto certificate_sweep(int order, int jobs) -> CertificateReport
{
    if (order < 2 || order > kMaxEnumerationOrder)
        throw std::invalid_argument("certificate_sweep supports 2.." + std::to_string(kMaxEnumerationOrder) +
                                    " vertices, got " + std::to_string(order));
    EnumerationOptions enumeration{order, 0, -1, jobs};
    auto partials = enumerate_reduce<CertificateReport>(enumeration, [](CertificateReport &acc, const Graph &g) {
        if (!has_equal_degree_path3(g))
            certify_graph(g, acc);
    });
    auto report = CertificateReport::empty(order);
    for (const auto &part : partials)
        report.merge(part);
    return report;
}

auto build_table(const std::vector<int> &lengths, const std::vector<int> &orders, int jobs) -> std::vector<TableRow>
{
    std::vector<TableRow> rows;
    for (int length : lengths) {
        for (int order : orders) {
            auto result = compute_extremal(order, length, jobs);
            TableRow row;
            row.length = length;
            row.order = order;
            row.p = result.p;
            row.extremal_count = result.extremal.size();
            row.seconds = result.seconds;
            if (order % 2 == 0 && length % 2 == 0) {
                int n = order / 2;
                row.half_graph_bound = (n * n + n) / 2;
                row.half_graph_attains = result.p == row.half_graph_bound;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

auto table_to_csv(const std::vector<TableRow> &rows, bool with_timing) -> std::string
{
    std::ostringstream out;
    out << "length,order,p,extremal,seconds,half_graph_bound,half_graph_attains\n";
    for (const auto &row : rows) {
        out << row.length << ',' << row.order << ',';
        if (row.p)
            out << *row.p;
        out << ',' << row.extremal_count << ',';
        if (with_timing)
            out << row.seconds;
        out << ',';
        if (row.half_graph_bound)
            out << *row.half_graph_bound;
        out << ',' << (row.half_graph_attains ? "true" : "false") << '\n';
    }
    return out.str();
}

auto table_to_json(const std::vector<TableRow> &rows, bool with_timing, int indent) -> std::string
{
    auto doc = nlohmann::ordered_json::array();
    for (const auto &row : rows) {
        nlohmann::ordered_json entry;
        entry["ell"] = row.length;
        entry["v"] = row.order;
        entry["p"] = row.p ? nlohmann::ordered_json(*row.p) : nlohmann::ordered_json(nullptr);
        entry["extremal"] = row.extremal_count;
        entry["seconds"] = with_timing ? nlohmann::ordered_json(row.seconds) : nlohmann::ordered_json(nullptr);
        entry["half_graph_bound"] =
            row.half_graph_bound ? nlohmann::ordered_json(*row.half_graph_bound) : nlohmann::ordered_json(nullptr);
        entry["half_graph_attains"] = row.half_graph_attains;
        doc.push_back(std::move(entry));
    }
    return doc.dump(indent);
}

} // namespace eqdeg
