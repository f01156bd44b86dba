#pragma once

// Canonical labelling for graphs of at most 11 vertices, shared by the public
// canon API and the enumerator.

#include <array>
#include <cstdint>
#include <vector>

namespace eqdeg::detail {

inline constexpr int kCanonMax = 11;

struct DenseGraph {
    int n = 0;
    std::array<std::uint32_t, kCanonMax + 1> rows{};
};

using Perm = std::array<std::int8_t, kCanonMax>;

class Canonizer {
public:
    /// Canonical labelling of g; afterwards the accessors describe g.
    auto run(const DenseGraph &g) -> void;

    auto form() const -> std::uint64_t { return best_form_; }
    /// Canonical position -> vertex.
    auto labeling() const -> const Perm & { return best_lab_; }
    /// Smallest vertex of the automorphism orbit containing v.
    auto orbit(int v) const -> int;
    /// Generators of the full automorphism group, as vertex -> image maps.
    auto generators() const -> const std::vector<Perm> & { return generators_; }
    auto group_size() const -> std::uint64_t { return group_size_; }

private:
    struct Partition {
        std::array<std::int8_t, kCanonMax> lab{};
        std::uint32_t starts = 0; // bit i set iff a cell begins at position i
    };

    auto cell_end(const Partition &p, int start) const -> int;
    auto refine(Partition &p, std::uint32_t queue) const -> void;
    auto search(const Partition &p, int level, bool first_path) -> int;
    auto leaf(const Partition &p, int level) -> int;
    auto leaf_form(const Partition &p) const -> std::uint64_t;
    auto record_automorphism(const Perm &from, const Perm &to) -> void;
    auto find(int v) const -> int;
    auto unite(int a, int b) -> void;

    const DenseGraph *g_ = nullptr;
    int n_ = 0;
    std::uint32_t sentinel_ = 0;

    bool have_first_ = false;
    std::uint64_t first_form_ = 0;
    std::uint64_t best_form_ = 0;
    Perm first_lab_{};
    Perm best_lab_{};
    std::array<std::int8_t, kCanonMax> path_{};
    std::array<std::int8_t, kCanonMax> first_path_{};
    std::array<std::int8_t, kCanonMax> best_path_{};
    int first_depth_ = 0;
    int best_depth_ = 0;

    mutable std::array<std::int8_t, kCanonMax> parent_{};
    std::vector<Perm> generators_;
    std::uint64_t group_size_ = 1;
};

} // namespace eqdeg::detail
