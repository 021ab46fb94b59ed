#include "latmu/mobius.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace latmu {

namespace {

void check_atom_cap(const FiniteLattice& L) {
    if (static_cast<int>(L.atoms().size()) > kMaxEnumAtoms)
        throw CapacityExceeded("atom-subset enumeration capped at 22 atoms");
}

// join of every atom subset, indexed by bitmask
std::vector<uint16_t> mask_joins(const FiniteLattice& L) {
    check_atom_cap(L);
    const auto& atoms = L.atoms();
    const int k = static_cast<int>(atoms.size());
    std::vector<uint16_t> jt(size_t{1} << k);
    jt[0] = static_cast<uint16_t>(L.bottom());
    for (uint32_t m = 1; m < (uint32_t{1} << k); ++m) {
        const int low = std::countr_zero(m);
        jt[m] = static_cast<uint16_t>(L.join(jt[m & (m - 1)], atoms[low]));
    }
    return jt;
}

std::vector<int> mask_to_list(uint32_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// Shared state for NBB enumeration with memoized BB tests.
struct NbbEnumerator {
    const FiniteLattice& L;
    const AtomOrder& ord;
    int k;
    std::vector<uint16_t> jt;
    std::unordered_map<uint32_t, bool> bb_memo;

    NbbEnumerator(const FiniteLattice& L_, const AtomOrder& ord_)
        : L(L_), ord(ord_), k(ord_.count()), jt(mask_joins(L_)) {}

    bool is_bb(uint32_t d_mask) {
        auto it = bb_memo.find(d_mask);
        if (it != bb_memo.end()) return it->second;
        const int j = jt[d_mask];
        bool bb = true;
        for (uint32_t m = d_mask; m && bb; m &= m - 1) {
            const int d = std::countr_zero(m);
            bool witness = false;
            for (int a = 0; a < k && !witness; ++a)
                if (ord.below(a, d) && ord.atom_ids[a] != j &&
                    L.leq(ord.atom_ids[a], j))
                    witness = true;
            if (!witness) bb = false;
        }
        bb_memo.emplace(d_mask, bb);
        return bb;
    }

    // mask is NBB; can atom a be added keeping it NBB?  Only subsets
    // containing a need checking.
    bool extendable(uint32_t mask, int a) {
        const uint32_t abit = uint32_t{1} << a;
        uint32_t s = mask;
        for (;;) {
            if (is_bb(s | abit)) return false;
            if (s == 0) break;
            s = (s - 1) & mask;
        }
        return true;
    }

    // Calls f(mask, join, size) for every NBB set, in lexicographic
    // order of the atom lists.
    template <class F>
    void for_each(F&& f) {
        f(uint32_t{0}, static_cast<int>(jt[0]), 0);
        dfs(0, -1, 0, std::forward<F>(f));
    }

    template <class F>
    void dfs(uint32_t mask, int last, int depth, F&& f) {
        for (int a = last + 1; a < k; ++a) {
            if (!extendable(mask, a)) continue;
            const uint32_t m2 = mask | (uint32_t{1} << a);
            f(m2, static_cast<int>(jt[m2]), depth + 1);
            dfs(m2, a, depth + 1, f);
        }
    }
};

}  // namespace

void AtomOrder::validate() const {
    const int k = count();
    for (int i = 0; i < k; ++i) {
        if (below(i, i)) throw Error("atom order is not irreflexive");
        for (int j = 0; j < k; ++j) {
            if (below(i, j) && below(j, i))
                throw CycleDetected("atom order contains a cycle");
            for (int l = 0; l < k && below(i, j); ++l)
                if (below(j, l) && !below(i, l))
                    throw Error("atom order is not transitive");
        }
    }
}

void AtomOrder::close_transitively() {
    const int k = count();
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            if (below(i, m))
                for (int j = 0; j < k; ++j)
                    if (below(m, j)) set_below(i, j);
    for (int i = 0; i < k; ++i)
        if (below(i, i)) throw CycleDetected("atom order contains a cycle");
}

AtomOrder AtomOrder::empty_on(const FiniteLattice& L) {
    AtomOrder ord;
    ord.atom_ids = L.atoms();
    ord.strictly_below.assign(ord.atom_ids.size() * ord.atom_ids.size(), 0);
    return ord;
}

AtomOrder incomparability_order(const FiniteLattice& L) {
    return AtomOrder::empty_on(L);
}

void AtomSelector::validate(const FiniteLattice& L) const {
    for (int x = 0; x < L.size(); ++x) {
        if (x == L.bottom()) continue;
        const uint32_t m = selection[static_cast<size_t>(x)];
        if (m == 0) throw Error("selector empty at a nonbottom element");
        for (uint32_t b = m; b; b &= b - 1)
            if (!L.leq(atom_ids[std::countr_zero(b)], x))
                throw Error("selector contains an atom not below its element");
    }
}

MobiusVector::MobiusVector(const FiniteLattice& L, std::vector<long long> v)
    : values(std::move(v)) {
    // Kronecker-sum invariant: sum over y <= x is delta(bottom, x).
    for (int x = 0; x < L.size(); ++x) {
        long long s = 0;
        for (int y = 0; y < L.size(); ++y)
            if (L.leq(y, x)) s += values[static_cast<size_t>(y)];
        if (s != (x == L.bottom() ? 1 : 0))
            throw Error("Mobius vector violates the Kronecker-sum identity");
    }
}

MobiusVector mobius_recursive(const FiniteLattice& L) {
    const int n = L.size();
    std::vector<long long> mu(static_cast<size_t>(n), 0);
    // Fill in a linear extension: down-set sizes give one.
    std::vector<std::pair<int, int>> order(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        order[static_cast<size_t>(x)] = {static_cast<int>(L.down_set(x).size()), x};
    std::sort(order.begin(), order.end());
    for (auto [sz, x] : order) {
        if (x == L.bottom()) {
            mu[static_cast<size_t>(x)] = 1;
            continue;
        }
        long long s = 0;
        for (int y = 0; y < n; ++y)
            if (y != x && L.leq(y, x)) s += mu[static_cast<size_t>(y)];
        mu[static_cast<size_t>(x)] = -s;
    }
    return MobiusVector(L, std::move(mu));
}

bool is_bounded_below(const FiniteLattice& L, const AtomOrder& order,
                      const std::vector<int>& d) {
    if (d.empty()) throw EmptySet("BB test requires a nonempty atom set");
    NbbEnumerator e(L, order);
    uint32_t m = 0;
    for (int i : d) m |= uint32_t{1} << i;
    return e.is_bb(m);
}

std::vector<std::vector<int>> enumerate_nbb_bases(const FiniteLattice& L,
                                                  const AtomOrder& order, int x) {
    NbbEnumerator e(L, order);
    std::vector<std::vector<int>> out;
    e.for_each([&](uint32_t mask, int join, int) {
        if (join == x) out.push_back(mask_to_list(mask));
    });
    return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_nbb_sets(
    const FiniteLattice& L, const AtomOrder& order) {
    NbbEnumerator e(L, order);
    std::vector<std::vector<std::vector<int>>> out(static_cast<size_t>(L.size()));
    e.for_each([&](uint32_t mask, int join, int) {
        out[static_cast<size_t>(join)].push_back(mask_to_list(mask));
    });
    return out;
}

MobiusVector mobius_nbb(const FiniteLattice& L, const AtomOrder& order) {
    NbbEnumerator e(L, order);
    std::vector<long long> mu(static_cast<size_t>(L.size()), 0);
    e.for_each([&](uint32_t, int join, int size) {
        mu[static_cast<size_t>(join)] += (size % 2 == 0) ? 1 : -1;
    });
    return MobiusVector(L, std::move(mu));
}

MobiusVector mobius_crosscut(const FiniteLattice& L) {
    const auto jt = mask_joins(L);
    const int k = static_cast<int>(L.atoms().size());
    std::vector<long long> mu(static_cast<size_t>(L.size()), 0);
    for (uint32_t m = 0; m < (uint32_t{1} << k); ++m)
        mu[jt[m]] += (std::popcount(m) % 2 == 0) ? 1 : -1;
    return MobiusVector(L, std::move(mu));
}

PerfectOrderReport is_perfect_order(const FiniteLattice& L, const AtomOrder& order) {
    const MobiusVector mu = mobius_recursive(L);
    NbbEnumerator e(L, order);
    std::vector<long long> count(static_cast<size_t>(L.size()), 0);
    std::vector<int> parity(static_cast<size_t>(L.size()), -1);  // -1 none, 2 mixed
    e.for_each([&](uint32_t, int join, int size) {
        ++count[static_cast<size_t>(join)];
        int& p = parity[static_cast<size_t>(join)];
        if (p == -1)
            p = size % 2;
        else if (p != size % 2)
            p = 2;
    });
    PerfectOrderReport rep;
    rep.perfect = true;
    for (int x = 0; x < L.size(); ++x) {
        const bool consistent = parity[static_cast<size_t>(x)] != 2;
        const bool ok = consistent &&
                        count[static_cast<size_t>(x)] == std::llabs(mu[x]);
        if (!ok) rep.perfect = false;
        rep.entries.push_back({x, count[static_cast<size_t>(x)], mu[x], consistent});
    }
    return rep;
}

PerfectOrderSearchResult search_perfect_order(const FiniteLattice& L,
                                              long long budget) {
    const int k = static_cast<int>(L.atoms().size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) pairs.emplace_back(i, j);
    const int p = static_cast<int>(pairs.size());

    PerfectOrderSearchResult res;
    res.status = SearchStatus::ProvedNone;
    for (int c = 0; c <= p; ++c) {
        // c-subsets of the pair list, lexicographically.
        std::vector<char> pick(static_cast<size_t>(p), 0);
        std::fill(pick.begin(), pick.begin() + c, 1);
        do {
            AtomOrder cand = AtomOrder::empty_on(L);
            bool valid = true;
            for (int i = 0; i < p && valid; ++i)
                if (pick[static_cast<size_t>(i)]) {
                    auto [a, b] = pairs[static_cast<size_t>(i)];
                    if (cand.below(b, a)) valid = false;
                    cand.set_below(a, b);
                }
            if (!valid) continue;
            // must be transitively closed already so each candidate is
            // generated exactly once
            bool closed = true;
            for (int a = 0; a < k && closed; ++a)
                for (int b = 0; b < k && closed; ++b)
                    if (cand.below(a, b))
                        for (int d = 0; d < k && closed; ++d)
                            if (cand.below(b, d) &&
                                (!cand.below(a, d) || a == d))
                                closed = false;
            if (!closed) continue;
            if (res.candidates_tried >= budget) {
                res.status = SearchStatus::BudgetExhausted;
                return res;
            }
            ++res.candidates_tried;
            if (is_perfect_order(L, cand).perfect) {
                res.status = SearchStatus::Found;
                res.order = std::move(cand);
                return res;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return res;
}

AtomSelector selector_from_order(const FiniteLattice& L, const AtomOrder& order) {
    check_atom_cap(L);
    const int k = order.count();
    AtomSelector sel;
    sel.atom_ids = order.atom_ids;
    sel.selection.assign(static_cast<size_t>(L.size()), 0);
    for (int x = 0; x < L.size(); ++x) {
        if (x == L.bottom()) continue;
        uint32_t below_x = 0;
        for (int a = 0; a < k; ++a)
            if (L.leq(order.atom_ids[a], x)) below_x |= uint32_t{1} << a;
        uint32_t minimal = 0;
        for (uint32_t m = below_x; m; m &= m - 1) {
            const int a = std::countr_zero(m);
            bool is_min = true;
            for (uint32_t m2 = below_x; m2 && is_min; m2 &= m2 - 1)
                if (order.below(std::countr_zero(m2), a)) is_min = false;
            if (is_min) minimal |= uint32_t{1} << a;
        }
        sel.selection[static_cast<size_t>(x)] = minimal;
    }
    sel.validate(L);
    return sel;
}

uint32_t core(const FiniteLattice& L, const AtomSelector& sel, uint32_t b_mask) {
    uint32_t cur = b_mask;
    for (;;) {
        if (cur == 0) return 0;
        int j = L.bottom();
        for (uint32_t m = cur; m; m &= m - 1)
            j = L.join(j, sel.atom_ids[std::countr_zero(m)]);
        uint32_t del = 0;
        for (int x = 0; x < L.size(); ++x)
            if (x != L.bottom() && L.leq(j, x))
                del |= sel.selection[static_cast<size_t>(x)];
        const uint32_t next = cur & ~del;
        if (next == cur) return cur;
        cur = next;
    }
}

std::vector<int> core(const FiniteLattice& L, const AtomSelector& sel,
                      const std::vector<int>& b) {
    uint32_t m = 0;
    for (int i : b) m |= uint32_t{1} << i;
    return mask_to_list(core(L, sel, m));
}

MobiusVector mobius_coreless(const FiniteLattice& L, const AtomSelector& sel) {
    const auto jt = mask_joins(L);
    const int k = static_cast<int>(sel.atom_ids.size());
    // Precompute, per element j, the union of M(x) over x >= j.
    std::vector<uint32_t> up_sel(static_cast<size_t>(L.size()), 0);
    for (int j = 0; j < L.size(); ++j)
        for (int x = 0; x < L.size(); ++x)
            if (x != L.bottom() && L.leq(j, x))
                up_sel[static_cast<size_t>(j)] |= sel.selection[static_cast<size_t>(x)];
    std::vector<long long> mu(static_cast<size_t>(L.size()), 0);
    for (uint32_t m = 0; m < (uint32_t{1} << k); ++m) {
        uint32_t cur = m;
        while (cur) {
            const uint32_t next = cur & ~up_sel[jt[cur]];
            if (next == cur) break;
            cur = next;
        }
        if (cur == 0)  // coreless
            mu[jt[m]] += (std::popcount(m) % 2 == 0) ? 1 : -1;
    }
    return MobiusVector(L, std::move(mu));
}

bool is_independent(const FiniteLattice& L, const std::vector<int>& b) {
    const auto& atoms = L.atoms();
    auto join_of = [&](const std::vector<int>& s, int skip) {
        int acc = L.bottom();
        for (size_t i = 0; i < s.size(); ++i)
            if (static_cast<int>(i) != skip) acc = L.join(acc, atoms[s[i]]);
        return acc;
    };
    const int full = join_of(b, -1);
    for (size_t i = 0; i < b.size(); ++i)
        if (join_of(b, static_cast<int>(i)) == full) return false;
    return true;
}

std::vector<std::vector<int>> enumerate_circuits(const FiniteLattice& L) {
    const auto jt = mask_joins(L);
    const int k = static_cast<int>(L.atoms().size());
    auto dependent = [&](uint32_t m) {
        for (uint32_t b = m; b; b &= b - 1)
            if (jt[m & ~(b & -b)] == jt[m]) return true;
        return false;
    };
    std::vector<std::vector<int>> out;
    for (uint32_t m = 1; m < (uint32_t{1} << k); ++m) {
        if (!dependent(m)) continue;
        bool minimal = true;
        for (uint32_t b = m; b && minimal; b &= b - 1)
            if (dependent(m & ~(b & -b))) minimal = false;
        if (minimal) out.push_back(mask_to_list(m));
    }
    return out;
}

namespace {

void require_total(const AtomOrder& ord) {
    const int k = ord.count();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!ord.below(i, j) && !ord.below(j, i))
                throw Error("a total atom order is required");
}

int order_min(const AtomOrder& ord, const std::vector<int>& s) {
    int best = s[0];
    for (int a : s)
        if (ord.below(a, best)) best = a;
    return best;
}

}  // namespace

std::vector<std::vector<int>> broken_circuits(const FiniteLattice& L,
                                              const AtomOrder& total_order) {
    require_total(total_order);
    std::vector<std::vector<int>> out;
    for (const auto& c : enumerate_circuits(L)) {
        const int m = order_min(total_order, c);
        std::vector<int> bc;
        for (int a : c)
            if (a != m) bc.push_back(a);
        out.push_back(std::move(bc));
    }
    return out;
}

bool condition_Cprime_holds(const FiniteLattice& L, const AtomOrder& total_order) {
    require_total(total_order);
    const auto jt = mask_joins(L);
    for (const auto& c : enumerate_circuits(L)) {
        uint32_t m = 0;
        for (int a : c) m |= uint32_t{1} << a;
        const int mn = order_min(total_order, c);
        if (jt[m & ~(uint32_t{1} << mn)] != jt[m]) return false;
    }
    return true;
}

MobiusVector mobius_nbc_generalized(const FiniteLattice& L,
                                    const AtomOrder& total_order) {
    require_total(total_order);
    const auto jt = mask_joins(L);
    const int k = static_cast<int>(L.atoms().size());
    std::vector<uint32_t> bc_masks;
    for (const auto& c : enumerate_circuits(L)) {
        uint32_t m = 0;
        for (int a : c) m |= uint32_t{1} << a;
        const int mn = order_min(total_order, c);
        if (jt[m & ~(uint32_t{1} << mn)] != jt[m])
            throw ConditionCprimeViolated(c, "condition (C') fails for a circuit");
        bc_masks.push_back(m & ~(uint32_t{1} << mn));
    }
    std::vector<long long> mu(static_cast<size_t>(L.size()), 0);
    for (uint32_t m = 0; m < (uint32_t{1} << k); ++m) {
        bool nbc = true;
        for (uint32_t b : bc_masks)
            if ((m & b) == b) {
                nbc = false;
                break;
            }
        if (nbc) mu[jt[m]] += (std::popcount(m) % 2 == 0) ? 1 : -1;
    }
    return MobiusVector(L, std::move(mu));
}

}  // namespace latmu
