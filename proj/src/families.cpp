#include "latmu/families.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace latmu {

// ---------------------------------------------------------------- fixtures

FiniteLattice boolean_lattice(int n) {
    if (n < 0 || n > 16) throw CapacityExceeded("boolean_lattice supports n <= 16");
    const int sz = 1 << n;
    std::vector<std::string> labels(static_cast<size_t>(sz));
    for (int m = 0; m < sz; ++m) {
        std::string s = "{";
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) {
                if (s.size() > 1) s += ",";
                s += std::to_string(i + 1);
            }
        labels[static_cast<size_t>(m)] = s + "}";
    }
    return FiniteLattice::from_leq(
        sz, [](int x, int y) { return (x & y) == x; }, std::move(labels));
}

FiniteLattice chain(int n) {
    if (n < 0 || n > 10000) throw CapacityExceeded("chain supports length <= 10000");
    std::vector<std::string> labels(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) labels[static_cast<size_t>(i)] = std::to_string(i);
    return FiniteLattice::from_leq(
        n + 1, [](int x, int y) { return x <= y; }, std::move(labels));
}

// ---------------------------------------------------------- set partitions

namespace {

// Restricted growth strings of length n: block ids in first-occurrence order.
std::vector<std::vector<int>> all_rgs(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int maxb) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b <= maxb; ++b) {
            cur[static_cast<size_t>(i)] = b;
            rec(i + 1, std::max(maxb, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

// pi <= sigma in refinement: each block of pi lies inside a block of sigma.
bool refines(const std::vector<int>& pi, const std::vector<int>& sigma) {
    std::vector<int> img(pi.size(), -1);
    for (size_t i = 0; i < pi.size(); ++i) {
        int& m = img[static_cast<size_t>(pi[i])];
        if (m == -1)
            m = sigma[i];
        else if (m != sigma[i])
            return false;
    }
    return true;
}

bool is_crossing(const std::vector<int>& id) {
    const int n = static_cast<int>(id.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (id[i] == id[k] && id[j] == id[l] && id[i] != id[j])
                        return true;
    return false;
}

SetPartition blocks_of(const std::vector<int>& id,
                       const std::vector<int>& ground) {
    int nb = 0;
    for (int b : id) nb = std::max(nb, b + 1);
    SetPartition p;
    p.blocks.resize(static_cast<size_t>(nb));
    for (size_t i = 0; i < id.size(); ++i)
        p.blocks[static_cast<size_t>(id[i])].push_back(ground[i]);
    return p;
}

}  // namespace

std::string SetPartition::str() const {
    std::string s;
    for (const auto& b : blocks) {
        if (!s.empty()) s += "/";
        for (int v : b) s += (v < 0 ? "-" + std::to_string(-v) : std::to_string(v));
    }
    return s;
}

PartitionLattice partition_lattice(int n) {
    if (n < 1 || n > 8) throw CapacityExceeded("partition_lattice supports 1 <= n <= 8");
    auto ids = all_rgs(n);
    std::vector<int> ground(static_cast<size_t>(n));
    std::iota(ground.begin(), ground.end(), 1);
    PartitionLattice out;
    std::vector<std::string> labels;
    for (const auto& id : ids) {
        out.elements.push_back(blocks_of(id, ground));
        labels.push_back(out.elements.back().str());
    }
    out.lattice = FiniteLattice::from_leq(
        static_cast<int>(ids.size()),
        [&](int x, int y) { return refines(ids[static_cast<size_t>(x)], ids[static_cast<size_t>(y)]); },
        std::move(labels));
    return out;
}

NcLattice noncrossing_lattice(int n) {
    if (n < 1 || n > 8) throw CapacityExceeded("noncrossing_lattice supports 1 <= n <= 8");
    std::vector<std::vector<int>> ids;
    for (auto& id : all_rgs(n))
        if (!is_crossing(id)) ids.push_back(std::move(id));
    std::vector<int> ground(static_cast<size_t>(n));
    std::iota(ground.begin(), ground.end(), 1);
    NcLattice out;
    std::vector<std::string> labels;
    for (const auto& id : ids) {
        out.elements.push_back(blocks_of(id, ground));
        labels.push_back(out.elements.back().str());
    }
    out.lattice = FiniteLattice::from_leq(
        static_cast<int>(ids.size()),
        [&](int x, int y) { return refines(ids[static_cast<size_t>(x)], ids[static_cast<size_t>(y)]); },
        std::move(labels));
    for (int a : out.lattice.atoms()) {
        const auto& blocks = out.elements[static_cast<size_t>(a)].blocks;
        std::pair<int, int> pr{0, 0};
        for (const auto& b : blocks)
            if (b.size() == 2) pr = {b[0], b[1]};
        out.atom_pairs.push_back(pr);
    }
    return out;
}

AtomOrder nc_atom_order(const NcLattice& nc, NcVariant variant) {
    AtomOrder ord = AtomOrder::empty_on(nc.lattice);
    const int k = ord.count();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            auto [i, j] = nc.atom_pairs[static_cast<size_t>(a)];
            auto [i2, j2] = nc.atom_pairs[static_cast<size_t>(b)];
            const bool rel = variant == NcVariant::Rank
                                 ? j < j2
                                 : (i <= i2 && j2 <= j && !(i == i2 && j == j2));
            if (rel) ord.set_below(a, b);
        }
    ord.validate();
    return ord;
}

// ------------------------------------------------------------ NCBD_n(S)

NcbdLattice ncbd_lattice(int n, const std::vector<int>& S) {
    if (n < 1 || n > 4) throw CapacityExceeded("ncbd_lattice supports 1 <= n <= 4");
    for (int s : S)
        if (s < 1 || s > n) throw Error("S must be a subset of [n]");
    const int sz = 2 * n;
    // position p: value p+1 for p < n, -(p-n+1) otherwise
    auto val = [&](int p) { return p < n ? p + 1 : -(p - n + 1); };
    auto inv = [&](int p) { return p < n ? p + n : p - n; };
    auto in_S = [&](int k) {
        return std::find(S.begin(), S.end(), k) != S.end();
    };

    std::vector<std::vector<int>> ids;
    for (auto& id : all_rgs(sz)) {
        if (is_crossing(id)) continue;
        // invariance under k -> -k
        bool ok = true;
        for (int p = 0; p < sz && ok; ++p)
            for (int q = p + 1; q < sz && ok; ++q)
                if ((id[static_cast<size_t>(p)] == id[static_cast<size_t>(q)]) !=
                    (id[static_cast<size_t>(inv(p))] == id[static_cast<size_t>(inv(q))]))
                    ok = false;
        if (!ok) continue;
        // at most one block fixed by the involution; zero-block {k,-k}
        // allowed only for k outside S
        int fixed = 0;
        for (int b = 0;; ++b) {
            std::vector<int> members;
            for (int p = 0; p < sz; ++p)
                if (id[static_cast<size_t>(p)] == b) members.push_back(p);
            if (members.empty()) break;
            std::vector<int> image;
            for (int p : members) image.push_back(inv(p));
            std::sort(image.begin(), image.end());
            if (image == members) {
                ++fixed;
                if (members.size() == 2 && in_S(val(members[0]) > 0
                                                    ? val(members[0])
                                                    : -val(members[0])))
                    ok = false;
            }
        }
        if (!ok || fixed > 1) continue;
        ids.push_back(std::move(id));
    }

    std::vector<int> ground(static_cast<size_t>(sz));
    for (int p = 0; p < sz; ++p) ground[static_cast<size_t>(p)] = val(p);
    NcbdLattice out;
    out.n = n;
    out.zero_block_forbidden = S;
    std::vector<std::string> labels;
    for (const auto& id : ids) {
        out.elements.push_back(blocks_of(id, ground));
        labels.push_back(out.elements.back().str());
    }
    out.lattice = FiniteLattice::from_leq(
        static_cast<int>(ids.size()),
        [&](int x, int y) { return refines(ids[static_cast<size_t>(x)], ids[static_cast<size_t>(y)]); },
        std::move(labels));

    for (int a : out.lattice.atoms()) {
        const auto& blocks = out.elements[static_cast<size_t>(a)].blocks;
        std::vector<std::vector<int>> big;
        for (const auto& b : blocks)
            if (b.size() > 1) big.push_back(b);
        NcbdAtomInfo info;
        if (big.size() == 1) {  // half-edge {k, -k}
            const int k = std::abs(big[0][0]);
            info = {k, k, true, true};
        } else {
            const int i = std::abs(big[0][0]), j = std::abs(big[0][1]);
            info.lo = std::min(i, j);
            info.hi = std::max(i, j);
            info.negative = (big[0][0] > 0) != (big[0][1] > 0);
            info.half_edge = false;
        }
        out.atom_info.push_back(info);
    }
    return out;
}

AtomOrder ncb_atom_order(const NcbdLattice& l) {
    AtomOrder ord = AtomOrder::empty_on(l.lattice);
    const int k = ord.count();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            const auto& ia = l.atom_info[static_cast<size_t>(a)];
            const auto& ib = l.atom_info[static_cast<size_t>(b)];
            const bool proper_incl =
                ia.lo <= ib.lo && ib.hi <= ia.hi &&
                !(ia.lo == ib.lo && ia.hi == ib.hi);
            const bool equal = ia.lo == ib.lo && ia.hi == ib.hi;
            if (proper_incl || (equal && ia.negative && !ib.negative))
                ord.set_below(a, b);
        }
    ord.validate();
    return ord;
}

// ---------------------------------------------------------- shuffle posets

std::vector<int> ShuffleWord::x_letters() const {
    std::vector<int> out;
    for (auto [c, i] : letters)
        if (c == 'x') out.push_back(i);
    return out;
}

std::vector<int> ShuffleWord::y_letters() const {
    std::vector<int> out;
    for (auto [c, i] : letters)
        if (c == 'y') out.push_back(i);
    return out;
}

std::string ShuffleWord::str() const {
    if (letters.empty()) return "-";
    std::string s;
    for (auto [c, i] : letters)
        s += static_cast<char>((c == 'x' ? 'a' : 'A') + i - 1);
    return s;
}

namespace {

std::vector<std::pair<char, int>> restrict_word(
    const ShuffleWord& w, const std::vector<int>& xs, const std::vector<int>& ys) {
    std::vector<std::pair<char, int>> out;
    for (auto [c, i] : w.letters) {
        const auto& keep = (c == 'x') ? xs : ys;
        if (std::binary_search(keep.begin(), keep.end(), i)) out.emplace_back(c, i);
    }
    return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// For letter x in w: largest y-index before x, smallest y-index after x.
std::pair<int, int> y_neighbors(const ShuffleWord& w, int x) {
    int before = 0, after = std::numeric_limits<int>::max();
    bool seen = false;
    for (auto [c, i] : w.letters) {
        if (c == 'x' && i == x) {
            seen = true;
            continue;
        }
        if (c != 'y') continue;
        if (!seen)
            before = std::max(before, i);
        else
            after = std::min(after, i);
    }
    return {before, after};
}

}  // namespace

bool shuffle_leq(const ShuffleWord& v, const ShuffleWord& w) {
    const auto vx = v.x_letters(), wx = w.x_letters();
    const auto vy = v.y_letters(), wy = w.y_letters();
    if (!subset(wx, vx) || !subset(vy, wy)) return false;
    // common letters must appear in the same relative order
    return restrict_word(v, wx, vy) == restrict_word(w, wx, vy);
}

std::vector<int> crossed_letters(const ShuffleWord& u, const ShuffleWord& v) {
    std::vector<int> out;
    const auto ux = u.x_letters(), vx = v.x_letters();
    for (int x : ux) {
        if (!std::binary_search(vx.begin(), vx.end(), x)) continue;
        auto [bu, au] = y_neighbors(u, x);
        auto [bv, av] = y_neighbors(v, x);
        if (au <= bv || av <= bu) out.push_back(x);
    }
    return out;
}

ShuffleWord shuffle_join(const ShuffleWord& u, const ShuffleWord& v) {
    if (u.m != v.m || u.n != v.n)
        throw Error("shuffle_join requires words from the same poset");
    const auto crossed = crossed_letters(u, v);
    const auto ux = u.x_letters(), vx = v.x_letters();
    std::vector<int> wx;
    for (int x : ux)
        if (std::binary_search(vx.begin(), vx.end(), x) &&
            !std::binary_search(crossed.begin(), crossed.end(), x))
            wx.push_back(x);
    std::vector<int> wy;
    const auto uy = u.y_letters(), vy = v.y_letters();
    std::set_union(uy.begin(), uy.end(), vy.begin(), vy.end(),
                   std::back_inserter(wy));
    // Place each surviving x right after the last y-letter forced before
    // it by either word.
    std::vector<std::vector<int>> gap(wy.size() + 1);
    for (int x : wx) {
        auto [bu, au] = y_neighbors(u, x);
        auto [bv, av] = y_neighbors(v, x);
        const int lo = std::max(bu, bv);
        const size_t g =
            static_cast<size_t>(std::upper_bound(wy.begin(), wy.end(), lo) - wy.begin());
        gap[g].push_back(x);
    }
    ShuffleWord w;
    w.m = u.m;
    w.n = u.n;
    for (size_t g = 0; g <= wy.size(); ++g) {
        for (int x : gap[g]) w.letters.emplace_back('x', x);
        if (g < wy.size()) w.letters.emplace_back('y', wy[g]);
    }
    if (!shuffle_leq(u, w) || !shuffle_leq(v, w))
        throw Error("internal error: constructed shuffle join is not an upper bound");
    return w;
}

ShufflePoset shuffle_poset(int m, int n) {
    if (m < 0 || n < 0 || m + n > 7)
        throw CapacityExceeded("shuffle_poset supports m + n <= 7");
    ShufflePoset out;
    out.m = m;
    out.n = n;
    for (int mx = 0; mx < (1 << m); ++mx) {
        std::vector<int> xs;
        for (int i = 0; i < m; ++i)
            if (mx >> i & 1) xs.push_back(i + 1);
        for (int my = 0; my < (1 << n); ++my) {
            std::vector<int> ys;
            for (int j = 0; j < n; ++j)
                if (my >> j & 1) ys.push_back(j + 1);
            // all interleavings, x-first at each step for determinism
            std::vector<std::pair<char, int>> cur;
            std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
                if (i == xs.size() && j == ys.size()) {
                    ShuffleWord w;
                    w.m = m;
                    w.n = n;
                    w.letters = cur;
                    out.elements.push_back(std::move(w));
                    return;
                }
                if (i < xs.size()) {
                    cur.emplace_back('x', xs[i]);
                    rec(i + 1, j);
                    cur.pop_back();
                }
                if (j < ys.size()) {
                    cur.emplace_back('y', ys[j]);
                    rec(i, j + 1);
                    cur.pop_back();
                }
            };
            rec(0, 0);
        }
    }
    std::vector<std::string> labels;
    for (const auto& w : out.elements) labels.push_back(w.str());
    out.lattice = FiniteLattice::from_leq(
        static_cast<int>(out.elements.size()),
        [&](int x, int y) {
            return shuffle_leq(out.elements[static_cast<size_t>(x)],
                               out.elements[static_cast<size_t>(y)]);
        },
        std::move(labels));
    return out;
}

int ShufflePoset::index_of(const ShuffleWord& w) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == w) return static_cast<int>(i);
    throw Error("shuffle word not in poset");
}

AtomOrder shuffle_atom_order(const ShufflePoset& p) {
    AtomOrder ord = AtomOrder::empty_on(p.lattice);
    const int k = ord.count();
    auto is_deletion = [&](int pos) {
        const auto& w = p.elements[static_cast<size_t>(ord.atom_ids[static_cast<size_t>(pos)])];
        return static_cast<int>(w.x_letters().size()) == p.m - 1;
    };
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && is_deletion(a) && !is_deletion(b)) ord.set_below(a, b);
    ord.validate();
    return ord;
}

// --------------------------------------------------------- dominance order

int IntegerPartition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Composition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string IntegerPartition::str() const {
    std::string s;
    for (int p : parts) {
        if (!s.empty()) s += ",";
        s += std::to_string(p);
    }
    return s;
}

namespace {

std::vector<int> prefix_sums(const std::vector<int>& parts, size_t len) {
    std::vector<int> s(len + 1, 0);
    for (size_t k = 1; k <= len; ++k)
        s[k] = s[k - 1] + (k <= parts.size() ? parts[k - 1] : 0);
    return s;
}

void check_partition(const IntegerPartition& p) {
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] < 1) throw Error("partition parts must be positive");
        if (i + 1 < p.parts.size() && p.parts[i] < p.parts[i + 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

}  // namespace

bool dominates(const IntegerPartition& a, const IntegerPartition& b) {
    if (a.n() != b.n()) throw NotSameN("partitions must have the same sum");
    const size_t len = std::max(a.parts.size(), b.parts.size());
    const auto sa = prefix_sums(a.parts, len), sb = prefix_sums(b.parts, len);
    for (size_t k = 1; k <= len; ++k)
        if (sa[k] < sb[k]) return false;
    return true;
}

Composition composition_join(const Composition& a, const Composition& b) {
    if (a.n() != b.n()) throw NotSameN("compositions must have the same sum");
    const size_t len = std::max(a.parts.size(), b.parts.size());
    const auto sa = prefix_sums(a.parts, len), sb = prefix_sums(b.parts, len);
    Composition out;
    int prev = 0;
    for (size_t k = 1; k <= len; ++k) {
        const int cur = std::max(sa[k], sb[k]);
        if (cur > prev) out.parts.push_back(cur - prev);
        prev = cur;
    }
    return out;
}

IntegerPartition partition_reflection(const Composition& c) {
    const size_t r = c.parts.size();
    std::vector<int> h = prefix_sums(c.parts, r);
    // Smallest concave integer majorant of the prefix sums: raise interior
    // points to the rounded-up midpoint of their neighbors until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 1; k + 1 <= r && r >= 2 && k <= r - 1; ++k) {
            const int need = (h[k - 1] + h[k + 1] + 1) / 2;
            if (h[k] < need) {
                h[k] = need;
                changed = true;
            }
        }
    }
    IntegerPartition out;
    for (size_t k = 1; k <= r; ++k)
        if (h[k] > h[k - 1]) out.parts.push_back(h[k] - h[k - 1]);
    check_partition(out);
    return out;
}

IntegerPartition dominance_join(const IntegerPartition& a, const IntegerPartition& b) {
    return partition_reflection(
        composition_join(Composition{a.parts}, Composition{b.parts}));
}

DominanceLattice dominance_lattice(int n) {
    if (n < 1 || n > 12) throw CapacityExceeded("dominance_lattice supports 1 <= n <= 12");
    DominanceLattice out;
    // descending lexicographic enumeration
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.elements.push_back(IntegerPartition{cur});
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::vector<std::string> labels;
    for (const auto& p : out.elements) labels.push_back(p.str());
    out.lattice = FiniteLattice::from_leq(
        static_cast<int>(out.elements.size()),
        [&](int x, int y) {
            return dominates(out.elements[static_cast<size_t>(y)],
                             out.elements[static_cast<size_t>(x)]);
        },
        std::move(labels));
    return out;
}

int DominanceLattice::index_of(const IntegerPartition& p) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return static_cast<int>(i);
    throw Error("partition not in lattice");
}

std::vector<DominanceAtomInfo> dominance_atoms(const IntegerPartition& beta) {
    check_partition(beta);
    const int r = static_cast<int>(beta.parts.size());
    auto at = [&](int k) {  // beta_k with beta_0 = inf, beta_{r+1,...} = 0
        if (k <= 0) return std::numeric_limits<int>::max();
        if (k > r) return 0;
        return beta.parts[static_cast<size_t>(k - 1)];
    };
    auto make_alpha = [&](int i, int j) {
        IntegerPartition a = beta;
        a.parts[static_cast<size_t>(i - 1)] += 1;
        a.parts[static_cast<size_t>(j - 1)] -= 1;
        while (!a.parts.empty() && a.parts.back() == 0) a.parts.pop_back();
        check_partition(a);
        return a;
    };
    std::vector<DominanceAtomInfo> out;
    // type (i): neither i nor i+1 in a wall
    for (int i = 1; i < r; ++i)
        if (at(i - 1) > at(i) && at(i) > at(i + 1) && at(i + 1) > at(i + 2)) {
            DominanceAtomInfo info;
            info.kind = DominanceAtomInfo::Kind::Move;
            info.from_row = i + 1;
            info.to_row = i;
            info.ci_lo = info.ci_hi = i;
            info.alpha = make_alpha(i, i + 1);
            out.push_back(std::move(info));
        }
    // type (ii): one atom per wall [i, j]
    for (int i = 1; i <= r; ++i) {
        if (!(at(i - 1) > at(i))) continue;  // i must be a wall top
        int j = i;
        while (at(j + 1) == at(i)) ++j;
        if (j == i) continue;
        DominanceAtomInfo info;
        info.kind = DominanceAtomInfo::Kind::Wall;
        info.from_row = j;
        info.to_row = i;
        info.ci_lo = i;
        info.ci_hi = j - 1;
        info.alpha = make_alpha(i, j);
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(),
              [](const DominanceAtomInfo& a, const DominanceAtomInfo& b) {
                  return a.ci_lo < b.ci_lo;
              });
    return out;
}

DominanceIntervalAtoms dominance_interval_atoms(const IntegerPartition& beta,
                                                const IntegerPartition& lambda) {
    if (!dominates(lambda, beta))
        throw NotComparable("lambda does not dominate beta");
    auto at = [&](int k) {
        if (k <= 0) return std::numeric_limits<int>::max();
        if (k > static_cast<int>(beta.parts.size())) return 0;
        return beta.parts[static_cast<size_t>(k - 1)];
    };

    DominanceIntervalAtoms out;
    for (auto& a : dominance_atoms(beta))
        if (dominates(lambda, a.alpha)) out.atoms.push_back(std::move(a));
    const int k = static_cast<int>(out.atoms.size());

    IntegerPartition join = beta;
    for (const auto& a : out.atoms) join = dominance_join(join, a.alpha);
    out.atoms_join_to_lambda = (join == lambda);

    auto has_move = [&](int from, int to) {
        for (const auto& a : out.atoms)
            if (a.from_row == from && a.to_row == to) return true;
        return false;
    };
    for (auto& b : out.atoms) {
        if (b.kind != DominanceAtomInfo::Kind::Move) continue;
        const int row = b.to_row;  // the move row+1 -> row
        b.special = at(row) == at(row + 1) + 1 && has_move(row + 2, row + 1) &&
                    has_move(row, row - 1);
    }

    out.order.assign(static_cast<size_t>(k) * k, 0);
    auto set_rel = [&](int lo, int hi) {
        out.order[static_cast<size_t>(lo) * k + hi] = 1;
    };
    int p = 0;
    while (p < k) {
        if (!out.atoms[static_cast<size_t>(p)].special) {
            ++p;
            continue;
        }
        int q = 0;
        while (p + q < k && out.atoms[static_cast<size_t>(p + q)].special) ++q;
        // extended run sigma_0 .. sigma_{q+1} with non-special flanks
        if (p == 0 || p + q >= k)
            throw Error("internal error: special run lacks a flanking atom");
        const int base = p - 1;
        for (int t = 1; t <= q; t += 3) {
            set_rel(base + t, base + t - 1);
            set_rel(base + t, base + t + 1);
        }
        int cnt[3] = {0, 0, 0};
        for (int t = 1; t <= q; ++t) ++cnt[t % 3];
        (void)cnt;
        switch (q % 3) {
            case 0: ++out.r0; break;
            case 1: ++out.r1; break;
            case 2: ++out.r2; break;
        }
        p += q + 1;
    }
    for (int t = 0; t < k; ++t) {
        // S_2 members are the sigma_{3i+2} positions of each run
        bool in_s2 = false;
        if (out.atoms[static_cast<size_t>(t)].special) {
            int start = t;
            while (start > 0 && out.atoms[static_cast<size_t>(start - 1)].special) --start;
            in_s2 = ((t - start + 1) % 3 == 2);
        }
        if (!in_s2) out.nbb_base.push_back(t);
    }
    return out;
}

long long dominance_mobius(const IntegerPartition& beta,
                           const IntegerPartition& lambda) {
    const auto data = dominance_interval_atoms(beta, lambda);
    if (!data.atoms_join_to_lambda || data.r1 >= 1) return 0;
    int nonspecial = 0;
    for (const auto& a : data.atoms)
        if (!a.special) ++nonspecial;
    return ((nonspecial + data.r2) % 2 == 0) ? 1 : -1;
}

DominanceInterval dominance_interval(const IntegerPartition& beta,
                                     const IntegerPartition& lambda) {
    DominanceInterval out;
    out.atom_data = dominance_interval_atoms(beta, lambda);
    // enumerate partitions between beta and lambda
    auto all = dominance_lattice(beta.n());
    for (const auto& p : all.elements)
        if (dominates(p, beta) && dominates(lambda, p)) out.elements.push_back(p);
    std::vector<std::string> labels;
    for (const auto& p : out.elements) labels.push_back(p.str());
    out.lattice = FiniteLattice::from_leq(
        static_cast<int>(out.elements.size()),
        [&](int x, int y) {
            return dominates(out.elements[static_cast<size_t>(y)],
                             out.elements[static_cast<size_t>(x)]);
        },
        std::move(labels));
    // align the atom order with the lattice's atom indexing
    const auto& atoms = out.lattice.atoms();
    const int k = static_cast<int>(atoms.size());
    if (k != static_cast<int>(out.atom_data.atoms.size()))
        throw Error("internal error: dominance atom count mismatch");
    std::vector<int> pos(static_cast<size_t>(k));  // lattice atom -> info index
    for (int a = 0; a < k; ++a) {
        const auto& part = out.elements[static_cast<size_t>(atoms[static_cast<size_t>(a)])];
        int found = -1;
        for (int t = 0; t < k; ++t)
            if (out.atom_data.atoms[static_cast<size_t>(t)].alpha == part) found = t;
        if (found < 0) throw Error("internal error: dominance atom not matched");
        pos[static_cast<size_t>(a)] = found;
    }
    out.atom_order = AtomOrder::empty_on(out.lattice);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && out.atom_data.below(pos[static_cast<size_t>(a)],
                                              pos[static_cast<size_t>(b)]))
                out.atom_order.set_below(a, b);
    out.atom_order.validate();
    return out;
}

// ------------------------------------------------------------------ Tamari

std::string BracketVector::str() const {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

bool is_valid_bracket_vector(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    for (int i = 1; i <= n; ++i) {
        const int vi = v[static_cast<size_t>(i - 1)];
        if (vi < 1 || vi > i) return false;
        for (int j = vi; j < i; ++j)
            if (v[static_cast<size_t>(j - 1)] < vi) return false;
    }
    return true;
}

BracketVector tamari_join(const BracketVector& a, const BracketVector& b) {
    if (a.v.size() != b.v.size() || !is_valid_bracket_vector(a.v) ||
        !is_valid_bracket_vector(b.v))
        throw InvalidBracketVector("tamari_join requires valid vectors of equal length");
    BracketVector out;
    for (size_t i = 0; i < a.v.size(); ++i)
        out.v.push_back(std::max(a.v[i], b.v[i]));
    if (!is_valid_bracket_vector(out.v))
        throw InvalidBracketVector("internal error: join is not a bracket vector");
    return out;
}

BracketVector tamari_meet(const BracketVector& a, const BracketVector& b) {
    if (a.v.size() != b.v.size() || !is_valid_bracket_vector(a.v) ||
        !is_valid_bracket_vector(b.v))
        throw InvalidBracketVector("tamari_meet requires valid vectors of equal length");
    const int n = static_cast<int>(a.v.size());
    std::vector<int> l(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int mi = std::min(a.v[static_cast<size_t>(i - 1)],
                                b.v[static_cast<size_t>(i - 1)]);
        int li = mi;
        for (int j = mi; j <= i - 1; ++j)
            li = std::min(li, l[static_cast<size_t>(j - 1)]);
        l[static_cast<size_t>(i - 1)] = li;
    }
    if (!is_valid_bracket_vector(l))
        throw InvalidBracketVector("internal error: meet is not a bracket vector");
    return BracketVector{std::move(l)};
}

TamariLattice tamari_lattice(int n) {
    if (n < 1 || n > 9) throw CapacityExceeded("tamari_lattice supports 1 <= n <= 9");
    TamariLattice out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.elements.push_back(BracketVector{cur});
            return;
        }
        for (int vi = 1; vi <= i; ++vi) {
            bool ok = true;
            for (int j = vi; j < i && ok; ++j)
                if (cur[static_cast<size_t>(j - 1)] < vi) ok = false;
            if (!ok) continue;
            cur.push_back(vi);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
    std::vector<std::string> labels;
    for (const auto& b : out.elements) labels.push_back(b.str());
    out.lattice = FiniteLattice::from_leq(
        static_cast<int>(out.elements.size()),
        [&](int x, int y) {
            const auto& a = out.elements[static_cast<size_t>(x)].v;
            const auto& b = out.elements[static_cast<size_t>(y)].v;
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] > b[i]) return false;
            return true;
        },
        std::move(labels));
    return out;
}

int TamariLattice::index_of(const BracketVector& b) const {
    const auto it = std::lower_bound(
        elements.begin(), elements.end(), b,
        [](const BracketVector& a, const BracketVector& c) { return a.v < c.v; });
    if (it == elements.end() || !(*it == b))
        throw InvalidBracketVector("bracket vector not in lattice");
    return static_cast<int>(it - elements.begin());
}

std::string Parenthesization::str() const {
    std::function<std::string(int)> rec = [&](int t) -> std::string {
        if (t < 0) return "x" + std::to_string(~t + 1);
        const auto& nd = nodes[static_cast<size_t>(t)];
        return "(" + rec(nd.left) + rec(nd.right) + ")";
    };
    return rec(root);
}

std::vector<Parenthesization> all_parenthesizations(int n) {
    // trees over leaves lo..hi (0-based)
    std::function<std::vector<Parenthesization>(int, int)> gen =
        [&](int lo, int hi) -> std::vector<Parenthesization> {
        std::vector<Parenthesization> out;
        if (lo == hi) {
            Parenthesization p;
            p.n = 0;
            p.root = ~lo;
            out.push_back(std::move(p));
            return out;
        }
        for (int s = lo; s < hi; ++s) {
            for (const auto& l : gen(lo, s))
                for (const auto& r : gen(s + 1, hi)) {
                    Parenthesization p;
                    p.nodes = l.nodes;
                    const int off = static_cast<int>(l.nodes.size());
                    for (const auto& nd : r.nodes)
                        p.nodes.push_back({nd.left >= 0 ? nd.left + off : nd.left,
                                           nd.right >= 0 ? nd.right + off : nd.right});
                    const int rroot = r.root >= 0 ? r.root + off : r.root;
                    p.nodes.push_back({l.root, rroot});
                    p.root = static_cast<int>(p.nodes.size()) - 1;
                    p.n = static_cast<int>(p.nodes.size());
                    out.push_back(std::move(p));
                }
        }
        return out;
    };
    return gen(0, n);
}

namespace {

// Token stream: -1 for '(', -2 for ')', >= 0 a leaf index.
std::vector<int> tokens_of(const Parenthesization& p) {
    std::vector<int> toks;
    std::function<void(int)> rec = [&](int t) {
        if (t < 0) {
            toks.push_back(~t);
            return;
        }
        toks.push_back(-1);
        rec(p.nodes[static_cast<size_t>(t)].left);
        rec(p.nodes[static_cast<size_t>(t)].right);
        toks.push_back(-2);
    };
    rec(p.root);
    return toks;
}

}  // namespace

BracketVector bracket_vector_of(const Parenthesization& p) {
    const auto toks = tokens_of(p);
    const int n = p.n;
    std::vector<int> pos_of_leaf(static_cast<size_t>(n) + 1, -1);
    for (size_t t = 0; t < toks.size(); ++t)
        if (toks[t] >= 0) pos_of_leaf[static_cast<size_t>(toks[t])] = static_cast<int>(t);
    BracketVector out;
    for (int i = 1; i <= n; ++i) {
        int xc = 0, pc = 0, last_x = -1;
        for (int t = pos_of_leaf[static_cast<size_t>(i - 1)]; t >= 0; --t) {
            if (toks[static_cast<size_t>(t)] >= 0) {
                ++xc;
                last_x = toks[static_cast<size_t>(t)];
            } else if (toks[static_cast<size_t>(t)] == -1) {
                ++pc;
            }
            if (xc == pc) break;
        }
        if (last_x < 0) throw Error("internal error: bracket rule failed");
        out.v.push_back(last_x + 1);
    }
    if (!is_valid_bracket_vector(out.v))
        throw Error("internal error: computed vector is invalid");
    return out;
}

Parenthesization parenthesization_of(const BracketVector& v) {
    if (!is_valid_bracket_vector(v.v))
        throw InvalidBracketVector("not a left bracket vector");
    for (auto& p : all_parenthesizations(static_cast<int>(v.v.size())))
        if (bracket_vector_of(p) == v) return p;
    throw Error("internal error: no parenthesization found");
}

std::vector<BracketVector> rotation_covers(const Parenthesization& p) {
    std::vector<BracketVector> out;
    for (size_t u = 0; u < p.nodes.size(); ++u) {
        if (p.nodes[u].left < 0) continue;  // rotation needs ((AB)C)
        Parenthesization q = p;
        const int w = q.nodes[u].left;
        const int a = q.nodes[static_cast<size_t>(w)].left;
        const int b = q.nodes[static_cast<size_t>(w)].right;
        const int c = q.nodes[u].right;
        q.nodes[static_cast<size_t>(w)] = {b, c};
        q.nodes[u] = {a, w};
        out.push_back(bracket_vector_of(q));
    }
    return out;
}

std::vector<std::pair<int, int>> tamari_tree_of(const BracketVector& v) {
    if (!is_valid_bracket_vector(v.v))
        throw InvalidBracketVector("not a left bracket vector");
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < v.v.size(); ++i)
        edges.emplace_back(v.v[i], static_cast<int>(i) + 2);
    return edges;
}

}  // namespace latmu
