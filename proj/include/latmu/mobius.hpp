#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latmu/lattice.hpp"

namespace latmu {

// Hard cap on atom-subset enumeration (2^22 subsets).
constexpr int kMaxEnumAtoms = 22;

// A strict partial order on the atoms of a host lattice, independent of
// the lattice order.  Relations are stored positionally: below(i, j)
// refers to atom_ids[i] and atom_ids[j].
struct AtomOrder {
    std::vector<int> atom_ids;
    std::vector<uint8_t> strictly_below;  // k*k matrix

    int count() const { return static_cast<int>(atom_ids.size()); }
    bool below(int i, int j) const {
        return strictly_below[static_cast<size_t>(i) * atom_ids.size() + j] != 0;
    }
    void set_below(int i, int j) {
        strictly_below[static_cast<size_t>(i) * atom_ids.size() + j] = 1;
    }
    // Throws unless irreflexive and transitive.
    void validate() const;
    // In-place reflexive-free transitive closure; throws on a cycle.
    void close_transitively();

    static AtomOrder empty_on(const FiniteLattice& L);
};

// The empty relation on A(L); NBB under it is exactly the crosscut sum.
AtomOrder incomparability_order(const FiniteLattice& L);

// M(x): a nonempty set of atoms <= x for every x > 0-hat, stored as an
// atom-position bitmask.
struct AtomSelector {
    std::vector<int> atom_ids;
    std::vector<uint32_t> selection;  // per element; unused at bottom

    void validate(const FiniteLattice& L) const;
};

// Integer Mobius values per element.  The Kronecker-sum invariant is
// checked at every construction.
struct MobiusVector {
    std::vector<long long> values;

    MobiusVector() = default;
    MobiusVector(const FiniteLattice& L, std::vector<long long> v);
    long long operator[](int x) const { return values[static_cast<size_t>(x)]; }
    bool operator==(const MobiusVector&) const = default;
};

MobiusVector mobius_recursive(const FiniteLattice& L);

// D as atom positions into order.atom_ids.
bool is_bounded_below(const FiniteLattice& L, const AtomOrder& order,
                      const std::vector<int>& d);

// All NBB bases of x, as sorted atom-position lists in lexicographic order.
std::vector<std::vector<int>> enumerate_nbb_bases(const FiniteLattice& L,
                                                  const AtomOrder& order, int x);
// All NBB sets grouped by their join: result[x] = bases of x.
std::vector<std::vector<std::vector<int>>> enumerate_nbb_sets(
    const FiniteLattice& L, const AtomOrder& order);

MobiusVector mobius_nbb(const FiniteLattice& L, const AtomOrder& order);
MobiusVector mobius_crosscut(const FiniteLattice& L);

struct PerfectOrderReport {
    bool perfect = false;
    // Per element: NBB base count, |mu|, and whether parities agree.
    struct Entry {
        int element;
        long long base_count;
        long long mu;
        bool sizes_consistent;
    };
    std::vector<Entry> entries;
};

PerfectOrderReport is_perfect_order(const FiniteLattice& L, const AtomOrder& order);

enum class SearchStatus { Found, ProvedNone, BudgetExhausted };

struct PerfectOrderSearchResult {
    SearchStatus status;
    std::optional<AtomOrder> order;
    long long candidates_tried = 0;
};

// Enumerates strict partial orders on A(L) by increasing relation count,
// deterministically, testing each until a perfect one is found or the
// budget runs out.
PerfectOrderSearchResult search_perfect_order(const FiniteLattice& L,
                                              long long budget);

AtomSelector selector_from_order(const FiniteLattice& L, const AtomOrder& order);

// The core operator of the coreless-set method: repeatedly delete the
// selector atoms of every element above the current join, to fixpoint.
uint32_t core(const FiniteLattice& L, const AtomSelector& sel, uint32_t b_mask);
std::vector<int> core(const FiniteLattice& L, const AtomSelector& sel,
                      const std::vector<int>& b);

MobiusVector mobius_coreless(const FiniteLattice& L, const AtomSelector& sel);

// --- generalized NBC machinery (total atom orders) ---

// B is independent when dropping any element strictly lowers the join.
bool is_independent(const FiniteLattice& L, const std::vector<int>& b);

// Minimal dependent atom sets, as sorted atom-position lists.
std::vector<std::vector<int>> enumerate_circuits(const FiniteLattice& L);

// Circuits minus their first element under a total order.
std::vector<std::vector<int>> broken_circuits(const FiniteLattice& L,
                                              const AtomOrder& total_order);

// (C'): every circuit keeps its join when its minimum is removed.
bool condition_Cprime_holds(const FiniteLattice& L, const AtomOrder& total_order);

MobiusVector mobius_nbc_generalized(const FiniteLattice& L,
                                    const AtomOrder& total_order);

}  // namespace latmu
