#include "canonizer.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace eqdeg::detail {

auto Canonizer::cell_end(const Partition &p, int start) const -> int
{
    auto rest = (p.starts | sentinel_) & ~((2U << start) - 1U);
    return std::countr_zero(rest);
}

// Coarsest equitable refinement. Cells are split by the number of neighbours
// in the splitter, fragments ordered by increasing count, so the resulting
// ordered partition depends only on the graph and the input partition.
auto Canonizer::refine(Partition &p, std::uint32_t queue) const -> void
{
    int cells = std::popcount(p.starts);
    std::array<int, kCanonMax> count{};
    while (queue != 0 && cells < n_) {
        int s = std::countr_zero(queue);
        queue &= queue - 1;
        int e = cell_end(p, s);
        std::uint32_t splitter = 0;
        for (int i = s; i < e; ++i)
            splitter |= 1U << p.lab[static_cast<std::size_t>(i)];

        for (auto cs = p.starts; cs != 0; cs &= cs - 1) {
            int t = std::countr_zero(cs);
            int te = cell_end(p, t);
            if (te - t < 2)
                continue;
            bool split = false;
            for (int i = t; i < te; ++i) {
                count[static_cast<std::size_t>(i)] =
                    std::popcount(g_->rows[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] & splitter);
                split = split || count[static_cast<std::size_t>(i)] != count[static_cast<std::size_t>(t)];
            }
            if (!split)
                continue;
            for (int i = t + 1; i < te; ++i) {
                auto c = count[static_cast<std::size_t>(i)];
                auto v = p.lab[static_cast<std::size_t>(i)];
                int j = i;
                for (; j > t && count[static_cast<std::size_t>(j - 1)] > c; --j) {
                    count[static_cast<std::size_t>(j)] = count[static_cast<std::size_t>(j - 1)];
                    p.lab[static_cast<std::size_t>(j)] = p.lab[static_cast<std::size_t>(j - 1)];
                }
                count[static_cast<std::size_t>(j)] = c;
                p.lab[static_cast<std::size_t>(j)] = v;
            }
            for (int i = t + 1; i < te; ++i) {
                if (count[static_cast<std::size_t>(i)] != count[static_cast<std::size_t>(i - 1)]) {
                    p.starts |= 1U << i;
                    queue |= 1U << i;
                    ++cells;
                }
            }
            queue |= 1U << t;
        }
    }
}

auto Canonizer::leaf_form(const Partition &p) const -> std::uint64_t
{
    std::uint64_t form = 0;
    for (int j = 1; j < n_; ++j) {
        auto row = g_->rows[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(j)])];
        for (int i = 0; i < j; ++i)
            form = (form << 1) | ((row >> p.lab[static_cast<std::size_t>(i)]) & 1U);
    }
    return form;
}

auto Canonizer::find(int v) const -> int
{
    while (parent_[static_cast<std::size_t>(v)] != v) {
        auto up = parent_[static_cast<std::size_t>(v)];
        parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(up)];
        v = up;
    }
    return v;
}

auto Canonizer::unite(int a, int b) -> void
{
    a = find(a);
    b = find(b);
    if (a == b)
        return;
    if (a > b)
        std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = static_cast<std::int8_t>(a);
}

auto Canonizer::orbit(int v) const -> int
{
    return find(v);
}

auto Canonizer::record_automorphism(const Perm &from, const Perm &to) -> void
{
    Perm gamma{};
    for (int i = 0; i < n_; ++i) {
        gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
        unite(from[static_cast<std::size_t>(i)], to[static_cast<std::size_t>(i)]);
    }
    generators_.push_back(gamma);
}

namespace {

auto common_prefix(const std::array<std::int8_t, kCanonMax> &a, const std::array<std::int8_t, kCanonMax> &b,
                   int depth) -> int
{
    int k = 0;
    while (k < depth && a[static_cast<std::size_t>(k)] == b[static_cast<std::size_t>(k)])
        ++k;
    return k;
}

} // namespace

// Returns the tree level at which exploration resumes; a node at level L keeps
// iterating its children only while results are >= L.
auto Canonizer::leaf(const Partition &p, int level) -> int
{
    auto form = leaf_form(p);
    if (!have_first_) {
        have_first_ = true;
        first_form_ = best_form_ = form;
        first_lab_ = best_lab_ = p.lab;
        first_path_ = best_path_ = path_;
        first_depth_ = best_depth_ = level;
        return level;
    }
    if (form == first_form_) {
        record_automorphism(first_lab_, p.lab);
        return common_prefix(path_, first_path_, std::min(level, first_depth_));
    }
    if (form == best_form_) {
        record_automorphism(best_lab_, p.lab);
        return common_prefix(path_, best_path_, std::min(level, best_depth_));
    }
    if (form < best_form_) {
        best_form_ = form;
        best_lab_ = p.lab;
        best_path_ = path_;
        best_depth_ = level;
    }
    return level;
}

auto Canonizer::search(const Partition &p, int level, bool first_path) -> int
{
    if (std::popcount(p.starts) == n_)
        return leaf(p, level);

    int t = 0;
    int te = 0;
    for (auto cs = p.starts; cs != 0; cs &= cs - 1) {
        t = std::countr_zero(cs);
        te = cell_end(p, t);
        if (te - t >= 2)
            break;
    }
    std::uint32_t cell = 0;
    for (int i = t; i < te; ++i)
        cell |= 1U << p.lab[static_cast<std::size_t>(i)];

    std::uint32_t tried = 0;
    int first_child = -1;
    for (auto rest = cell; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (first_path && first_child >= 0) {
            // Children in one orbit of the prefix stabiliser have isomorphic subtrees.
            int root = find(v);
            bool seen = false;
            for (auto tr = tried; tr != 0 && !seen; tr &= tr - 1)
                seen = find(std::countr_zero(tr)) == root;
            if (seen)
                continue;
        }
        Partition child = p;
        for (int i = t; i < te; ++i) {
            if (child.lab[static_cast<std::size_t>(i)] == v) {
                std::swap(child.lab[static_cast<std::size_t>(i)], child.lab[static_cast<std::size_t>(t)]);
                break;
            }
        }
        child.starts |= 1U << (t + 1);
        refine(child, 1U << t);
        path_[static_cast<std::size_t>(level)] = static_cast<std::int8_t>(v);
        int resume = search(child, level + 1, first_path && first_child < 0);
        if (first_child < 0)
            first_child = v;
        tried |= 1U << v;
        if (resume < level)
            return resume;
    }

    if (first_path) {
        int root = find(first_child);
        std::uint64_t orbit_size = 0;
        for (auto rest = cell; rest != 0; rest &= rest - 1)
            orbit_size += find(std::countr_zero(rest)) == root ? 1U : 0U;
        group_size_ *= orbit_size;
    }
    return level;
}

auto Canonizer::run(const DenseGraph &g) -> void
{
    g_ = &g;
    n_ = g.n;
    sentinel_ = 1U << n_;
    have_first_ = false;
    generators_.clear();
    group_size_ = 1;
    for (int i = 0; i < kCanonMax; ++i)
        parent_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);

    Partition root;
    for (int i = 0; i < n_; ++i)
        root.lab[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
    root.starts = 1;
    refine(root, 1);
    search(root, 0, true);
}

} // namespace eqdeg::detail
