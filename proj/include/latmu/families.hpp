#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latmu/lattice.hpp"
#include "latmu/mobius.hpp"

namespace latmu {

// --- generic fixtures ---

FiniteLattice boolean_lattice(int n);  // n <= 16
FiniteLattice chain(int n);            // length n, n+1 elements

// --- set partitions ---

struct SetPartition {
    // blocks sorted by minimum, elements ascending; ground set [n]
    std::vector<std::vector<int>> blocks;
    std::string str() const;
};

// Pi_n under refinement, 1 <= n <= 8.
struct PartitionLattice {
    FiniteLattice lattice;
    std::vector<SetPartition> elements;
};
PartitionLattice partition_lattice(int n);

// NC_n: non-crossing partitions, refinement order, joins computed inside
// the family by closure search.  1 <= n <= 8.
struct NcLattice {
    FiniteLattice lattice;
    std::vector<SetPartition> elements;
    // aligned with lattice.atoms(): the pair (i, j), i < j, of each atom
    std::vector<std::pair<int, int>> atom_pairs;
};
NcLattice noncrossing_lattice(int n);

enum class NcVariant { Rank, Interval };
AtomOrder nc_atom_order(const NcLattice& nc, NcVariant variant);

// --- signed non-crossing partitions (NCBD_n(S)) ---

struct NcbdAtomInfo {
    int lo = 0, hi = 0;    // associated interval in [n]
    bool negative = false; // negative edge or half-edge
    bool half_edge = false;
};

struct NcbdLattice {
    FiniteLattice lattice;
    int n = 0;
    std::vector<int> zero_block_forbidden;      // the set S
    std::vector<SetPartition> elements;         // over positions 0..2n-1
    std::vector<NcbdAtomInfo> atom_info;        // aligned with lattice.atoms()
};
// 1 <= n <= 4; S subset of [n].
NcbdLattice ncbd_lattice(int n, const std::vector<int>& S);
AtomOrder ncb_atom_order(const NcbdLattice& l);

// --- shuffle posets ---

struct ShuffleWord {
    int m = 0, n = 0;
    // ('x', i) or ('y', j) with 1-based indices; x-letters and y-letters
    // each appear in increasing index order
    std::vector<std::pair<char, int>> letters;

    std::vector<int> x_letters() const;
    std::vector<int> y_letters() const;
    std::string str() const;
    bool operator==(const ShuffleWord&) const = default;
};

bool shuffle_leq(const ShuffleWord& v, const ShuffleWord& w);
// x-letter indices crossed in (u, v)
std::vector<int> crossed_letters(const ShuffleWord& u, const ShuffleWord& v);
ShuffleWord shuffle_join(const ShuffleWord& u, const ShuffleWord& v);

struct ShufflePoset {
    FiniteLattice lattice;
    int m = 0, n = 0;
    std::vector<ShuffleWord> elements;
    int index_of(const ShuffleWord& w) const;
};
// m + n <= 7
ShufflePoset shuffle_poset(int m, int n);
// every deletion atom strictly below every insertion atom
AtomOrder shuffle_atom_order(const ShufflePoset& p);

// --- dominance order ---

struct IntegerPartition {
    std::vector<int> parts;  // weakly decreasing, positive
    int n() const;
    std::string str() const;  // comma-separated parts
    bool operator==(const IntegerPartition&) const = default;
};

struct Composition {
    std::vector<int> parts;  // positive
    int n() const;
};

bool dominates(const IntegerPartition& a, const IntegerPartition& b);

Composition composition_join(const Composition& a, const Composition& b);
IntegerPartition partition_reflection(const Composition& c);
IntegerPartition dominance_join(const IntegerPartition& a, const IntegerPartition& b);

struct DominanceLattice {
    FiniteLattice lattice;
    std::vector<IntegerPartition> elements;
    int index_of(const IntegerPartition& p) const;
};
// 1 <= n <= 12
DominanceLattice dominance_lattice(int n);

struct DominanceAtomInfo {
    enum class Kind { Move, Wall } kind = Kind::Move;
    int from_row = 0, to_row = 0;  // the move j -> i
    int ci_lo = 0, ci_hi = 0;      // critical interval
    bool special = false;
    IntegerPartition alpha;
};

// Atoms of [beta, 1-hat], listed by critical interval.
std::vector<DominanceAtomInfo> dominance_atoms(const IntegerPartition& beta);

// Atoms of [beta, lambda] with special flags, run data and the Eq.-style
// partial order on extended special runs.
struct DominanceIntervalAtoms {
    std::vector<DominanceAtomInfo> atoms;   // by critical interval
    // strictly_below over positions in `atoms`
    std::vector<uint8_t> order;
    bool below(int i, int j) const {
        return order[static_cast<size_t>(i) * atoms.size() + j] != 0;
    }
    bool atoms_join_to_lambda = false;
    int r0 = 0, r1 = 0, r2 = 0;             // special runs mod 3
    std::vector<int> nbb_base;              // A minus S_2 (positions), if r1 == 0
};
DominanceIntervalAtoms dominance_interval_atoms(const IntegerPartition& beta,
                                                const IntegerPartition& lambda);

// Closed-form two-variable Mobius value.
long long dominance_mobius(const IntegerPartition& beta,
                           const IntegerPartition& lambda);

// The interval [beta, lambda] as a lattice, with the canonical atom order
// mapped onto its atoms.
struct DominanceInterval {
    FiniteLattice lattice;
    std::vector<IntegerPartition> elements;
    DominanceIntervalAtoms atom_data;
    AtomOrder atom_order;  // aligned with lattice.atoms()
};
DominanceInterval dominance_interval(const IntegerPartition& beta,
                                     const IntegerPartition& lambda);

// --- Tamari lattices ---

struct BracketVector {
    std::vector<int> v;
    std::string str() const;  // "(1,2,3)"
    bool operator==(const BracketVector&) const = default;
};

bool is_valid_bracket_vector(const std::vector<int>& v);

BracketVector tamari_join(const BracketVector& a, const BracketVector& b);
BracketVector tamari_meet(const BracketVector& a, const BracketVector& b);

struct TamariLattice {
    FiniteLattice lattice;
    std::vector<BracketVector> elements;  // lexicographic
    int index_of(const BracketVector& b) const;
};
// 1 <= n <= 9
TamariLattice tamari_lattice(int n);

// Full binary tree over leaves x_1..x_{n+1}.
struct Parenthesization {
    struct Node {
        int left = 0, right = 0;  // >= 0: node index; < 0: leaf ~leaf_index
    };
    int n = 0;  // internal node count
    std::vector<Node> nodes;
    int root = -1;
    std::string str() const;  // "(((x1x2)x3)x4)"
};

std::vector<Parenthesization> all_parenthesizations(int n);
BracketVector bracket_vector_of(const Parenthesization& p);
Parenthesization parenthesization_of(const BracketVector& v);
// Upper covers under the rotation ((AB)C) -> (A(BC)).
std::vector<BracketVector> rotation_covers(const Parenthesization& p);

// Edges {i+1, v_i} on vertex set [n+1].
std::vector<std::pair<int, int>> tamari_tree_of(const BracketVector& v);

}  // namespace latmu
