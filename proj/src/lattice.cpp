#include "latmu/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace latmu {

namespace {

int find_first_bit(const uint64_t* w, size_t nw) {
    for (size_t i = 0; i < nw; ++i)
        if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    return -1;
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(const CoverList& input) {
    const int n = input.size;
    if (n <= 0) throw Error("lattice must have at least one element");
    if (n > kMaxSize) throw CapacityExceeded("lattice size exceeds 50000");
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (auto [lo, hi] : input.covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw Error("cover index out of range");
        if (lo == hi) throw CycleDetected("self-loop in cover relations");
        succ[lo].push_back(hi);
        ++indeg[hi];
    }
    // Kahn topological sort; shortfall means a cycle.
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> deg = indeg;
    for (int x = 0; x < n; ++x)
        if (deg[x] == 0) order.push_back(x);
    for (size_t i = 0; i < order.size(); ++i)
        for (int y : succ[order[i]])
            if (--deg[y] == 0) order.push_back(y);
    if (static_cast<int>(order.size()) != n)
        throw CycleDetected("cover relations contain a cycle");

    // Reflexive-transitive closure, filled in reverse topological order.
    std::vector<uint8_t> rel(static_cast<size_t>(n) * n, 0);
    for (int i = n - 1; i >= 0; --i) {
        const int x = order[i];
        rel[static_cast<size_t>(x) * n + x] = 1;
        for (int y : succ[x])
            for (int z = 0; z < n; ++z)
                if (rel[static_cast<size_t>(y) * n + z])
                    rel[static_cast<size_t>(x) * n + z] = 1;
    }
    return build(n, std::move(rel), input.labels);
}

FiniteLattice FiniteLattice::build(int n, std::vector<uint8_t> rel,
                                   std::vector<std::string> labels) {
    if (n <= 0) throw Error("lattice must have at least one element");
    if (n > kMaxSize) throw CapacityExceeded("lattice size exceeds 50000");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error("label count does not match element count");
    auto r = [&](int x, int y) -> uint8_t& {
        return rel[static_cast<size_t>(x) * n + y];
    };
    for (int x = 0; x < n; ++x) {
        if (!r(x, x)) throw Error("order relation is not reflexive");
        for (int y = x + 1; y < n; ++y)
            if (r(x, y) && r(y, x))
                throw Error("order relation is not antisymmetric");
    }

    FiniteLattice L;
    L.n_ = n;
    L.nw_ = (static_cast<size_t>(n) + 63) / 64;
    L.labels_ = std::move(labels);

    // Linear extension: sort by down-set size, index as tie-break.
    std::vector<int> dsize(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r(y, x)) ++dsize[x];
    L.rank_elem_.resize(n);
    std::iota(L.rank_elem_.begin(), L.rank_elem_.end(), 0);
    std::sort(L.rank_elem_.begin(), L.rank_elem_.end(), [&](int a, int b) {
        return dsize[a] != dsize[b] ? dsize[a] < dsize[b] : a < b;
    });
    L.rank_.resize(n);
    for (int i = 0; i < n; ++i) L.rank_[L.rank_elem_[i]] = i;

    L.up_.assign(static_cast<size_t>(n) * L.nw_, 0);
    L.down_.assign(static_cast<size_t>(n) * L.nw_, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r(x, y)) {
                const int ry = L.rank_[y], rx = L.rank_[x];
                L.up_[L.row(x) + ry / 64] |= uint64_t{1} << (ry % 64);
                L.down_[L.row(y) + rx / 64] |= uint64_t{1} << (rx % 64);
            }

    // Unique extremes.
    int bot = -1, top = -1;
    for (int x = 0; x < n; ++x) {
        bool is_bot = true, is_top = true;
        for (int y = 0; y < n && (is_bot || is_top); ++y) {
            if (!r(x, y)) is_bot = false;
            if (!r(y, x)) is_top = false;
        }
        if (is_bot) {
            if (bot >= 0) throw NoBoundedExtremes("no unique minimum");
            bot = x;
        }
        if (is_top) {
            if (top >= 0) throw NoBoundedExtremes("no unique maximum");
            top = x;
        }
    }
    if (bot < 0) throw NoBoundedExtremes("no unique minimum");
    if (top < 0) throw NoBoundedExtremes("no unique maximum");
    L.bottom_ = bot;
    L.top_ = top;

    // Join = least common upper bound, found as the topologically first
    // element of up(x) & up(y); unique iff its up-set covers the whole
    // intersection.  Meets are dual.
    L.join_.resize(static_cast<size_t>(n) * n);
    L.meet_.resize(static_cast<size_t>(n) * n);
    const size_t nw = L.nw_;
    std::vector<uint64_t> tmp(nw);
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            for (size_t i = 0; i < nw; ++i)
                tmp[i] = L.up_[L.row(x) + i] & L.up_[L.row(y) + i];
            const int rz = find_first_bit(tmp.data(), nw);
            if (rz < 0) throw NotALattice(x, y, "join");
            const int z = L.rank_elem_[rz];
            for (size_t i = 0; i < nw; ++i)
                if (tmp[i] & ~L.up_[L.row(z) + i]) throw NotALattice(x, y, "join");
            L.join_[static_cast<size_t>(x) * n + y] = static_cast<uint16_t>(z);
            L.join_[static_cast<size_t>(y) * n + x] = static_cast<uint16_t>(z);

            int rw = -1;
            for (size_t i = nw; i-- > 0;) {
                const uint64_t w = L.down_[L.row(x) + i] & L.down_[L.row(y) + i];
                if (w) {
                    rw = static_cast<int>(i * 64 + 63 - std::countl_zero(w));
                    break;
                }
            }
            if (rw < 0) throw NotALattice(x, y, "meet");
            const int m = L.rank_elem_[rw];
            for (size_t i = 0; i < nw; ++i) {
                const uint64_t w = L.down_[L.row(x) + i] & L.down_[L.row(y) + i];
                if (w & ~L.down_[L.row(m) + i]) throw NotALattice(x, y, "meet");
            }
            L.meet_[static_cast<size_t>(x) * n + y] = static_cast<uint16_t>(m);
            L.meet_[static_cast<size_t>(y) * n + x] = static_cast<uint16_t>(m);
        }
    }

    // Transitive reduction: y covers x iff the strict interval is empty.
    L.up_covers_.resize(n);
    L.low_covers_.resize(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !r(x, y)) continue;
            bool cover = true;
            for (size_t i = 0; i < nw && cover; ++i) {
                uint64_t between = L.up_[L.row(x) + i] & L.down_[L.row(y) + i];
                // clear x and y themselves
                const int rx = L.rank_[x], ry = L.rank_[y];
                if (static_cast<size_t>(rx / 64) == i) between &= ~(uint64_t{1} << (rx % 64));
                if (static_cast<size_t>(ry / 64) == i) between &= ~(uint64_t{1} << (ry % 64));
                if (between) cover = false;
            }
            if (cover) {
                L.covers_.emplace_back(x, y);
                L.up_covers_[x].push_back(y);
                L.low_covers_[y].push_back(x);
            }
        }
    std::sort(L.covers_.begin(), L.covers_.end());
    for (auto& v : L.up_covers_) std::sort(v.begin(), v.end());
    for (auto& v : L.low_covers_) std::sort(v.begin(), v.end());

    L.atoms_ = L.up_covers_[bot];
    return L;
}

bool FiniteLattice::is_cover(int lo, int hi) const {
    const auto& uc = up_covers_[lo];
    return std::binary_search(uc.begin(), uc.end(), hi);
}

std::string FiniteLattice::label(int x) const {
    if (!labels_.empty() && !labels_[x].empty()) return labels_[x];
    return std::to_string(x);
}

int FiniteLattice::join_set(const std::vector<int>& s) const {
    int acc = bottom_;
    for (int x : s) acc = join(acc, x);
    return acc;
}

int FiniteLattice::meet_set(const std::vector<int>& s) const {
    int acc = top_;
    for (int x : s) acc = meet(acc, x);
    return acc;
}

std::vector<int> FiniteLattice::up_set(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (leq(x, y)) out.push_back(y);
    return out;
}

std::vector<int> FiniteLattice::down_set(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (leq(y, x)) out.push_back(y);
    return out;
}

FiniteLattice::IntervalResult FiniteLattice::interval(int lo, int hi) const {
    if (!leq(lo, hi)) throw NotComparable("interval endpoints are not comparable");
    std::vector<int> elems;
    for (int z = 0; z < n_; ++z)
        if (leq(lo, z) && leq(z, hi)) elems.push_back(z);
    std::vector<int> pos(n_, -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    std::vector<std::string> labs;
    if (!labels_.empty())
        for (int z : elems) labs.push_back(labels_[z]);
    auto sub = FiniteLattice::from_leq(
        static_cast<int>(elems.size()),
        [&](int a, int b) { return leq(elems[a], elems[b]); }, std::move(labs));
    return {std::move(sub), std::move(elems)};
}

std::optional<std::vector<int>> FiniteLattice::rank_function() const {
    // Longest chain from bottom; graded iff every cover raises it by one.
    std::vector<int> rk(n_, 0);
    std::vector<int> order(rank_elem_);
    for (int e : order)
        for (int y : up_covers_[e]) rk[y] = std::max(rk[y], rk[e] + 1);
    for (auto [lo, hi] : covers_)
        if (rk[hi] != rk[lo] + 1) return std::nullopt;
    return rk;
}

bool FiniteLattice::is_semimodular() const {
    // Covering property: x,y cover x^y implies x v y covers both.
    for (int z = 0; z < n_; ++z) {
        const auto& ups = up_covers_[z];
        for (size_t i = 0; i < ups.size(); ++i)
            for (size_t j = i + 1; j < ups.size(); ++j) {
                const int x = ups[i], y = ups[j];
                if (meet(x, y) != z) continue;
                const int v = join(x, y);
                if (!is_cover(x, v) || !is_cover(y, v)) return false;
            }
    }
    return true;
}

bool FiniteLattice::is_atomic() const {
    for (int x = 0; x < n_; ++x) {
        int acc = bottom_;
        for (int a : atoms_)
            if (leq(a, x)) acc = join(acc, a);
        if (acc != x) return false;
    }
    return true;
}

bool FiniteLattice::is_geometric() const {
    return is_ranked() && is_atomic() && is_semimodular();
}

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b) {
    const long long n = static_cast<long long>(a.size()) * b.size();
    if (n > FiniteLattice::kMaxSize)
        throw CapacityExceeded("product lattice exceeds 50000 elements");
    auto idx = [&](int x, int y) { return x * b.size() + y; };
    std::vector<std::string> labs;
    if (!a.labels().empty() || !b.labels().empty()) {
        labs.resize(static_cast<size_t>(n));
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < b.size(); ++y)
                labs[idx(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
    }
    return FiniteLattice::from_leq(
        static_cast<int>(n),
        [&](int p, int q) {
            return a.leq(p / b.size(), q / b.size()) &&
                   b.leq(p % b.size(), q % b.size());
        },
        std::move(labs));
}

}  // namespace latmu
