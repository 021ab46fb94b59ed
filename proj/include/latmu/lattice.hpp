#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latmu/errors.hpp"

namespace latmu {

// Cover-relation input for building a lattice.  Pairs may include
// transitively implied relations; construction canonicalizes by
// transitive reduction.
struct CoverList {
    int size = 0;
    std::vector<std::pair<int, int>> covers;  // (lower, upper)
    std::vector<std::string> labels;          // optional, one per element
};

// A finite lattice over dense element indices 0..size-1.  Immutable after
// construction; meet/join tables are precomputed and construction fails
// fast when some pair lacks a unique bound.
class FiniteLattice {
public:
    static constexpr int kMaxSize = 50000;

    static FiniteLattice from_covers(const CoverList& input);

    // Build from an explicit order relation.  `leq` must be a partial
    // order; reflexivity and antisymmetry are checked, transitivity is
    // the caller's contract (family generators produce genuine orders).
    template <class Leq>
    static FiniteLattice from_leq(int size, Leq&& leq,
                                  std::vector<std::string> labels = {}) {
        if (size > kMaxSize) throw CapacityExceeded("lattice size exceeds 50000");
        std::vector<uint8_t> rel(static_cast<size_t>(size) * size);
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y)
                rel[static_cast<size_t>(x) * size + y] = leq(x, y) ? 1 : 0;
        return build(size, std::move(rel), std::move(labels));
    }

    int size() const { return n_; }
    bool leq(int x, int y) const {
        return (up_[row(x) + static_cast<size_t>(rank_[y] >> 6)] >>
                (rank_[y] & 63)) & 1u;
    }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    int join(int x, int y) const { return join_[static_cast<size_t>(x) * n_ + y]; }
    int meet(int x, int y) const { return meet_[static_cast<size_t>(x) * n_ + y]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    const std::vector<int>& atoms() const { return atoms_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int x) const { return up_covers_[x]; }
    const std::vector<int>& lower_covers(int x) const { return low_covers_[x]; }
    bool is_cover(int lo, int hi) const;

    const std::vector<std::string>& labels() const { return labels_; }
    // Display label; falls back to the index when no labels were supplied.
    std::string label(int x) const;

    // Fold of the join table; empty set gives bottom.
    int join_set(const std::vector<int>& s) const;
    int meet_set(const std::vector<int>& s) const;

    // Elements comparable with x.
    std::vector<int> up_set(int x) const;
    std::vector<int> down_set(int x) const;

    struct IntervalResult;
    IntervalResult interval(int lo, int hi) const;

    // Per-element rank when the lattice is graded, otherwise nullopt.
    std::optional<std::vector<int>> rank_function() const;
    bool is_ranked() const { return rank_function().has_value(); }
    bool is_semimodular() const;
    bool is_atomic() const;
    bool is_geometric() const;

private:
    friend FiniteLattice direct_product(const FiniteLattice&, const FiniteLattice&);

    static FiniteLattice build(int size, std::vector<uint8_t> rel,
                               std::vector<std::string> labels);

    size_t row(int x) const { return static_cast<size_t>(x) * nw_; }

    int n_ = 0;
    size_t nw_ = 0;  // 64-bit words per bitset row
    // Bit r of row x in up_ means: the element with topo rank r is >= x.
    std::vector<uint64_t> up_, down_;
    std::vector<int> rank_;       // element -> topological rank
    std::vector<int> rank_elem_;  // topological rank -> element
    std::vector<uint16_t> join_, meet_;
    int bottom_ = 0, top_ = 0;
    std::vector<int> atoms_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_covers_, low_covers_;
    std::vector<std::string> labels_;
};

struct FiniteLattice::IntervalResult {
    FiniteLattice lattice;
    std::vector<int> to_parent;  // interval index -> parent element index
};

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace latmu
