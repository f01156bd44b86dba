#include "eqdeg/certificates.hpp"

#include "eqdeg/canon.hpp"
#include "eqdeg/detector.hpp"
#include "eqdeg/graph6.hpp"
#include "eqdeg/lambda.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <string>

namespace eqdeg {

namespace {

auto missing(const Graph &g, VertexSet s, VertexSet t) -> long long
{
    return block_counts(g, s, t).non_edges;
}

auto missing(const Graph &g, VertexSet s) -> long long
{
    return block_counts(g, s, s).non_edges;
}

auto present(const Graph &g, VertexSet s, VertexSet t) -> long long
{
    return block_counts(g, s, t).edges;
}

auto pair_text(int u, int v) -> std::string
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

auto half(long long even_value) -> long long
{
    return even_value / 2;
}

auto require_property_free(const Graph &g, const char *who) -> void
{
    if (has_equal_degree_path3(g))
        throw CertificateError(std::string(who) + ": the graph has an equal-degree path of length 3");
}

auto isomorphic_to_complete_bipartite(const Graph &g, int a, int b) -> bool
{
    if (g.order() <= kMaxCanonicalOrder)
        return are_isomorphic(g, complete_bipartite(a, b));
    return is_complete_bipartite(g, a, b);
}

} // namespace

auto pair_partition(const Graph &g, int u, int v) -> PairPartition
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw CertificateError("pair_partition: vertex out of range");
    if (u == v)
        throw CertificateError("pair_partition: the two vertices must differ");
    if (g.degree(u) != g.degree(v))
        throw CertificateError("pair_partition: degrees differ at " + pair_text(u, v));

    PairPartition p;
    p.u = u;
    p.v = v;
    p.n = g.order() / 2;
    p.odd_order = g.order() % 2 == 1;
    p.beta = g.degree(u);
    p.ind = g.adjacent(u, v) ? 1 : 0;
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    p.common = nu & nv;
    p.only_u = nu - p.common - VertexSet::single(v);
    p.only_v = nv - p.common - VertexSet::single(u);
    p.rest = g.vertices() - nu - nv - VertexSet::single(u) - VertexSet::single(v);
    p.x = p.common.size();
    p.c = p.beta - p.n - p.ind;

    int private_size = p.beta - p.x - p.ind;
    int rest_size = p.x - 2 * p.c - (p.odd_order ? 1 : 2);
    if (p.only_u.size() != private_size || p.only_v.size() != private_size || p.rest.size() != rest_size)
        throw std::logic_error("pair_partition: size identities fail at " + pair_text(u, v));
    auto tiles = p.common | p.only_u | p.only_v | p.rest | VertexSet::single(u) | VertexSet::single(v);
    if (tiles != g.vertices() ||
        p.common.size() + p.only_u.size() + p.only_v.size() + p.rest.size() + 2 != g.order())
        throw std::logic_error("pair_partition: parts do not tile the vertex set");
    return p;
}

auto check_zero_blocks(const Graph &g, const PairPartition &p) -> bool
{
    return present(g, p.only_u, p.common) == 0 && present(g, p.only_v, p.common) == 0 &&
           present(g, p.common, p.common) == 0 && present(g, p.only_u, p.only_v) == 0;
}

auto check_complement_identity(const Graph &g, const PairPartition &p) -> ComplementIdentity
{
    if (!check_zero_blocks(g, p))
        throw CertificateError("check_complement_identity: zero blocks fail at " + pair_text(p.u, p.v));

    const auto su = VertexSet::single(p.u);
    const auto sv = VertexSet::single(p.v);
    const long long beta = p.beta;
    const long long ind = p.ind;
    const long long x = p.x;
    const long long n = p.n;

    ComplementIdentity r;
    r.listed_blocks = missing(g, su, p.only_v) + missing(g, sv, p.only_u) + missing(g, p.only_u, p.only_v) +
                      missing(g, p.common, p.only_u) + missing(g, p.common, p.only_v) + missing(g, p.common) +
                      missing(g, su, sv);
    r.closed_form = (beta + 1 - ind) * (beta + 1 - ind) - half(x * x + 5 * x) - ind;
    r.outside_rest = missing(g, g.vertices() - p.rest);
    r.bd_complement = missing(g, p.common, p.rest);
    r.d_complement = missing(g, p.rest);
    r.complement_edges = binomial2(g.order()) - g.edge_count();
    r.lower_bound = (beta - 1 - ind) * (beta - 1 - ind) + 4 * n - half(x * x + x) - (p.odd_order ? 2 : 4) - ind +
                    r.bd_complement + r.d_complement;
    return r;
}

auto check_c_lemma(const Graph &g, int u, int v) -> CLemmaCheck
{
    require_property_free(g, "check_c_lemma");
    CLemmaCheck r;
    r.pair = pair_partition(g, u, v);
    const auto &p = r.pair;
    if (p.c < 1)
        throw CertificateError("check_c_lemma: needs c >= 1 at " + pair_text(u, v));

    auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };
    const long long n = p.n;
    const long long c = p.c;
    const long long x = p.x;
    const long long ind = p.ind;
    const long long beta = p.beta;
    const long long rest_size = p.rest.size();

    // gamma: the largest number of neighbours in D shared by two vertices of B.
    std::array<int, kMaxOrder> first_with{};
    first_with.fill(-1);
    std::optional<SecondLevelPartition> second;
    std::vector<int> common = p.common.members();
    for (int w : common) {
        int k = (g.neighbors(w) & p.rest).size();
        if (first_with[static_cast<std::size_t>(k)] < 0) {
            first_with[static_cast<std::size_t>(k)] = w;
            continue;
        }
        if (!second || k > second->gamma) {
            second = SecondLevelPartition{};
            second->gamma = k;
        }
    }
    if (second) {
        // Lexicographically smallest pair realising gamma: the first two in vertex order.
        int found = 0;
        for (int w : common) {
            if ((g.neighbors(w) & p.rest).size() != second->gamma)
                continue;
            (found == 0 ? second->u1 : second->v1) = w;
            if (++found == 2)
                break;
        }
        auto du = g.neighbors(second->u1) & p.rest;
        auto dv = g.neighbors(second->v1) & p.rest;
        second->common = du & dv;
        second->only_u1 = du - second->common;
        second->only_v1 = dv - second->common;
        second->y = second->common.size();
    }
    r.second = second;
    r.complement_edges = binomial2(g.order()) - g.edge_count();
    r.d_complement = missing(g, p.rest);
    r.bd_complement = missing(g, p.common, p.rest);
    r.assembled = missing(g, g.vertices() - p.rest) + 2 * rest_size + r.bd_complement + r.d_complement;
    if (p.odd_order)
        r.final_bound = n * n + c * c - c - ind;
    else
        r.final_bound = n * n - n + c * c - ind;

    if (!second) {
        fail("gamma undefined: no two vertices of B share a neighbour count in D");
        if (r.complement_edges < r.final_bound)
            fail("final bound fails");
        return r;
    }

    const auto &s = *second;
    const long long gamma = s.gamma;
    const long long y = s.y;
    if (present(g, s.only_u1, s.common) != 0 || present(g, s.only_v1, s.common) != 0 ||
        present(g, s.common, s.common) != 0 || present(g, s.only_u1, s.only_v1) != 0)
        fail("second-level zero blocks fail at " + pair_text(s.u1, s.v1));
    if (s.only_u1.size() != s.gamma - s.y || s.only_v1.size() != s.gamma - s.y)
        fail("second-level private parts differ from gamma - y");

    r.d_blocks = missing(g, s.only_u1, s.common) + missing(g, s.only_v1, s.common) + missing(g, s.common) +
                 missing(g, s.only_u1, s.only_v1);
    r.d_blocks_closed = gamma * gamma - half(y * y + y);
    r.gamma_pairs = binomial2(gamma);
    if (r.d_blocks != r.d_blocks_closed)
        fail("second-level block count differs from gamma^2 - (y^2+y)/2");
    if (r.d_complement < r.d_blocks)
        fail("missing(D) below the second-level block count");
    if (r.d_blocks_closed < r.gamma_pairs)
        fail("gamma^2 - (y^2+y)/2 below C(gamma,2)");

    const long long b_size = x;
    if (present(g, p.common, p.rest) > gamma * b_size + half((rest_size - gamma) * (rest_size - gamma + 1)))
        fail("e(B,D) above gamma|B| + (|D|-gamma)(|D|-gamma+1)/2");
    r.bd_product = half((rest_size - gamma) * (2 * b_size - rest_size + gamma - 1));
    if (p.odd_order) {
        r.bd_expanded = binomial2(x + 1) - binomial2(gamma) - 2 * c * c - c - (2 * c + 1) * gamma - x;
        r.bd_relaxed = binomial2(x + 1) - binomial2(gamma) + 2 * c * c + 3 * c + 1 - 2 * (c + 1) * x;
    } else {
        r.bd_expanded = binomial2(x + 1) - binomial2(gamma) - 2 * c * c - 3 * c - (2 * c + 2) * gamma - x - 1;
        r.bd_relaxed = binomial2(x + 1) - binomial2(gamma) + 2 * c * c + 5 * c + 3 - (2 * c + 3) * x;
    }
    if (r.bd_complement < r.bd_product)
        fail("missing(B,D) below (|D|-gamma)(2|B|-|D|+gamma-1)/2");
    if (r.bd_product != r.bd_expanded)
        fail("expanded form of the missing(B,D) bound disagrees");
    if (r.bd_product < r.bd_relaxed)
        fail("relaxed missing(B,D) bound exceeds the product bound");

    const long long shift = p.odd_order ? 2 : 4;
    r.first_level = (beta - 1 - ind) * (beta - 1 - ind) + 4 * n - half(x * x + x) - shift - ind + r.bd_complement +
                    r.d_complement;
    long long substituted =
        (beta - 1 - ind) * (beta - 1 - ind) + 4 * n - half(x * x + x) - shift - ind + r.bd_relaxed + r.gamma_pairs;
    if (p.odd_order)
        r.middle = (beta - 1 - ind) * (beta - 1 - ind) + 4 * n - 2 - ind + 2 * c * c + 3 * c + 1 - 2 * (c + 1) * x;
    else
        r.middle = (beta - 1 - ind) * (beta - 1 - ind) + 4 * n - 4 - ind + 2 * c * c + 5 * c + 3 - (2 * c + 3) * x;

    if (r.complement_edges < r.assembled)
        fail("complement edge count below the sum of its parts");
    if (r.assembled < r.first_level)
        fail("first-level complement bound fails");
    if (substituted != r.middle)
        fail("simplified middle bound disagrees with the substituted one");
    if (r.first_level < r.middle)
        fail("middle bound exceeds the first-level bound");
    if (r.middle < r.final_bound)
        fail("middle bound below the final bound");
    if (r.complement_edges < r.final_bound)
        fail("final complement bound fails");
    return r;
}

auto certificate_check_ids() -> const std::vector<std::string_view> &
{
    static const std::vector<std::string_view> ids{
        kPairPartitionCheck, kZeroBlocksCheck,  kComplementCheck,      kCLemmaCheck,
        kBetaUpperCheck,     kBetaLowerCheck,   kDichotomyCheck,       kMaxDegreeCheck,
        kNeighborDegreesCheck, kThreeEqualCheck, kNeighborSplitCheck,
    };
    return ids;
}

auto CertificateReport::empty(int order) -> CertificateReport
{
    CertificateReport report;
    report.order = order;
    for (auto id : certificate_check_ids())
        report.checks.push_back(CheckRecord{std::string(id), order, 0, {}});
    return report;
}

auto CertificateReport::at(std::string_view id) -> CheckRecord &
{
    for (auto &record : checks)
        if (record.check == id)
            return record;
    throw std::out_of_range("unknown certificate check: " + std::string(id));
}

auto CertificateReport::at(std::string_view id) const -> const CheckRecord &
{
    return const_cast<CertificateReport *>(this)->at(id);
}

auto CertificateReport::violation_count() const -> std::uint64_t
{
    std::uint64_t total = 0;
    for (const auto &record : checks)
        total += record.violations.size();
    return total;
}

auto CertificateReport::merge(const CertificateReport &other) -> void
{
    if (checks.empty())
        *this = empty(other.order);
    graphs += other.graphs;
    for (const auto &record : other.checks) {
        auto &mine = at(record.check);
        mine.instances += record.instances;
        mine.violations.insert(mine.violations.end(), record.violations.begin(), record.violations.end());
        std::sort(mine.violations.begin(), mine.violations.end());
    }
}

auto CertificateReport::to_json(int indent) const -> std::string
{
    nlohmann::ordered_json doc;
    doc["schema"] = "cert-report/1";
    doc["order"] = order;
    doc["graphs"] = graphs;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto &record : checks) {
        nlohmann::ordered_json entry;
        entry["check"] = record.check;
        entry["order"] = record.order;
        entry["instances"] = record.instances;
        entry["violations"] = nlohmann::ordered_json::array();
        for (const auto &v : record.violations)
            entry["violations"].push_back({{"graph6", v.graph6}, {"pair", v.pair}, {"detail", v.detail}});
        doc["checks"].push_back(std::move(entry));
    }
    return doc.dump(indent);
}

namespace {

class Recorder {
public:
    Recorder(const Graph &g, CertificateReport &report) : g_(g), report_(report) {}

    auto tested(std::string_view id) -> void { ++report_.at(id).instances; }

    auto violated(std::string_view id, std::vector<int> pair, std::string detail) -> void
    {
        if (code_.empty())
            code_ = to_graph6(g_);
        report_.at(id).violations.push_back(Violation{code_, std::move(pair), std::move(detail)});
    }

    auto check(std::string_view id, bool ok, std::vector<int> pair, const std::string &detail) -> void
    {
        tested(id);
        if (!ok)
            violated(id, std::move(pair), detail);
    }

private:
    const Graph &g_;
    CertificateReport &report_;
    std::string code_;
};

auto global_lemmas_into(const Graph &g, Recorder &rec) -> void
{
    const int order = g.order();
    const bool odd = order % 2 == 1;
    const int n = order / 2;
    const int e = g.edge_count();
    const int delta = g.max_degree();
    const auto beta = largest_repeated_degree(g);
    const bool dense = odd ? e >= n * n + n : e >= n * n - 1;
    const auto b = beta.value_or(-1);
    auto at = [](const char *what, int value) { return std::string(what) + "=" + std::to_string(value); };

    if (odd && n >= 2 && dense && beta) {
        rec.check(kBetaUpperCheck, b <= n + 1, {}, at("beta", b) + " exceeds n+1");
        if (b == n + 1)
            rec.check(kBetaUpperCheck, isomorphic_to_complete_bipartite(g, n, n + 1), {},
                      "beta=n+1 but the graph is not K_{n,n+1}");
        rec.check(kBetaLowerCheck, b >= 3, {}, at("beta", b) + " below 3");
        if (n >= 5)
            rec.check(kDichotomyCheck, b >= delta - 1 || delta <= n + 1, {},
                      at("beta", b) + ", " + at("delta", delta));
        if (n >= 2 && n <= 4 && b <= n)
            rec.check(kMaxDegreeCheck, delta <= 2 * n - 2, {}, at("delta", delta) + " exceeds 2n-2");
    }
    if (!odd && n >= 3 && dense && beta) {
        rec.check(kBetaUpperCheck, b <= n + 1, {}, at("beta", b) + " exceeds n+1");
        if (b == n + 1)
            rec.check(kBetaUpperCheck, isomorphic_to_complete_bipartite(g, n + 1, n - 1), {},
                      "beta=n+1 but the graph is not K_{n+1,n-1}");
        rec.check(kBetaLowerCheck, b >= 3 && b <= delta, {}, at("beta", b) + " outside [3, delta]");
        if (n >= 6)
            rec.check(kDichotomyCheck, b >= delta - 1 || delta <= n + 2, {},
                      at("beta", b) + ", " + at("delta", delta));
        if (n <= 5 && b <= n)
            rec.check(kMaxDegreeCheck, delta <= 2 * n - 3, {}, at("delta", delta) + " exceeds 2n-3");
    }

    // A neighbour u of v sharing two neighbours with v has a degree unique within N(v).
    for (int v = 0; v < order; ++v) {
        auto nv = g.neighbors(v);
        for (int u : nv) {
            if ((g.neighbors(u) & nv).size() < 2)
                continue;
            bool clash = false;
            for (int w : nv.without(u))
                clash = clash || g.degree(w) == g.degree(u);
            rec.check(kNeighborDegreesCheck, !clash, {v, u}, "a neighbour of v shares the degree of u");
        }
    }

    // With one vertex v0 adjacent to all but at most one other vertex v1
    // (and d(v1) not repeated when v1 exists), no degree >= 3 occurs three times.
    auto top = g.degree_class(delta);
    if (order >= 2 && top.size() == 1 && delta >= order - 2) {
        int v0 = top.first();
        auto outside = g.vertices() - g.neighbors(v0) - VertexSet::single(v0);
        bool gated = outside.empty() || g.degree(outside.first()) != b;
        if (gated) {
            std::array<int, kMaxOrder> count{};
            bool triple = false;
            for (int v = 0; v < order; ++v)
                triple = triple || (g.degree(v) >= 3 && ++count[static_cast<std::size_t>(g.degree(v))] >= 3);
            rec.check(kThreeEqualCheck, !triple, {v0}, "three vertices share a degree of at least 3");
        }
    }

    if (!odd && beta && b <= delta - 2 && delta >= n + 3) {
        for (int v0 : g.degree_class(delta)) {
            auto split = neighborhood_split(g, v0);
            if (!split.bound_applies)
                continue;
            rec.check(kNeighborSplitCheck, split.bound_holds, {v0},
                      at("|B|", split.low.size()) + " below " + at("threshold", split.threshold));
        }
    }
}

} // namespace

auto check_global_lemmas(const Graph &g) -> CertificateReport
{
    require_property_free(g, "check_global_lemmas");
    auto report = CertificateReport::empty(g.order());
    report.graphs = 1;
    Recorder rec(g, report);
    global_lemmas_into(g, rec);
    return report;
}

auto certify_graph(const Graph &g, CertificateReport &report) -> void
{
    require_property_free(g, "certify_graph");
    if (report.checks.empty())
        report = CertificateReport::empty(g.order());
    ++report.graphs;
    Recorder rec(g, report);
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.degree(u) != g.degree(v))
                continue;
            PairPartition p;
            try {
                p = pair_partition(g, u, v);
                rec.tested(kPairPartitionCheck);
            } catch (const std::logic_error &err) {
                rec.check(kPairPartitionCheck, false, {u, v}, err.what());
                continue;
            }
            bool zero = check_zero_blocks(g, p);
            rec.check(kZeroBlocksCheck, zero && zero == !path3_exists_between(g, u, v), {u, v},
                      "zero blocks fail or disagree with the path search");
            if (!zero)
                continue;
            auto identity = check_complement_identity(g, p);
            std::string detail = "seven-block count " + std::to_string(identity.listed_blocks) + ", closed form " +
                                 std::to_string(identity.closed_form) + ", outside D " +
                                 std::to_string(identity.outside_rest) + ", complement " +
                                 std::to_string(identity.complement_edges) + ", bound " +
                                 std::to_string(identity.lower_bound);
            rec.check(kComplementCheck, identity.holds(), {u, v}, detail);
            if (p.c >= 1) {
                auto lemma = check_c_lemma(g, u, v);
                std::string why;
                for (const auto &f : lemma.failures)
                    why += (why.empty() ? "" : "; ") + f;
                rec.check(kCLemmaCheck, lemma.holds(), {u, v}, why);
            }
        }
    }
    global_lemmas_into(g, rec);
}

} // namespace eqdeg
