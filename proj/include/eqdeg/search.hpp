#pragma once

#include "eqdeg/certificates.hpp"
#include "eqdeg/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eqdeg {

/// Default largest order for searches with path length above 3.
inline constexpr int kLongPathOrderCap = 9;

struct SearchOptions {
    int order = 1;
    int length = 3;
    int min_edges = 0;
    /// Negative means no upper bound.
    int max_edges = -1;
    int jobs = 1;
    /// Skip the detector on graphs with fewer edges than the best found so
    /// far. The histogram then only covers edge counts >= p.
    bool fast = false;
    /// Raise to search longer paths above kLongPathOrderCap vertices.
    int long_path_order_cap = kLongPathOrderCap;
};

struct SearchResult {
    int order = 0;
    int length = 0;
    /// Most edges among graphs without an equal-degree path of the given
    /// length; empty when the edge range holds no such graph.
    std::optional<int> p;
    /// graph6 of every class attaining p, sorted.
    std::vector<std::string> extremal;
    /// Classes without the path, per edge count.
    std::map<int, std::uint64_t> histogram;
    std::uint64_t enumerated = 0;
    double seconds = 0;

    /// `with_timing` false writes null for seconds, so equal searches give
    /// byte-identical documents.
    auto to_json(bool with_timing = false, int indent = 2) const -> std::string;
};

/// Exhaustive over all classes in the edge range; parallel per options.jobs
/// with results independent of the worker count. Throws std::invalid_argument
/// outside 1..11 vertices, path lengths outside 1..8, or above the
/// long-path order cap.
auto compute_extremal(const SearchOptions &options) -> SearchResult;
auto compute_extremal(int order, int length, int jobs = 1) -> SearchResult;

struct TheoremCheck {
    int order = 0;
    int n = 0;
    int expected_p = 0;
    /// K_{n,n+1} for odd orders, K_{n-1,n+1} for even ones.
    std::string expected_graph6;
    SearchResult result;
    bool p_matches = false;
    bool unique_extremal = false;
    bool nothing_above = false;

    auto holds() const -> bool { return p_matches && unique_extremal && nothing_above; }
};

/// Length-3 search on 5..11 vertices against the closed-form extremal value
/// and graph. Throws std::invalid_argument outside 5..11.
auto verify_theorem(int order, int jobs = 1) -> TheoremCheck;

/// certify_graph over every class on `order` vertices with no length-3
/// equal-degree path. Throws std::invalid_argument outside 2..11 vertices.
auto certificate_sweep(int order, int jobs = 1) -> CertificateReport;

struct TableRow {
    int length = 0;
    int order = 0;
    std::optional<int> p;
    std::size_t extremal_count = 0;
    double seconds = 0;
    /// (n^2+n)/2 for even order 2n and even length.
    std::optional<int> half_graph_bound;
    bool half_graph_attains = false;
};

auto build_table(const std::vector<int> &lengths, const std::vector<int> &orders, int jobs = 1)
    -> std::vector<TableRow>;

/// Header row plus one line per row; the seconds column is left empty unless
/// `with_timing` is set.
auto table_to_csv(const std::vector<TableRow> &rows, bool with_timing = false) -> std::string;
auto table_to_json(const std::vector<TableRow> &rows, bool with_timing = false, int indent = 2) -> std::string;

} // namespace eqdeg
