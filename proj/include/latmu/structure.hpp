#pragma once

#include <optional>
#include <vector>

#include "latmu/lattice.hpp"
#include "latmu/mobius.hpp"
#include "latmu/polynomial.hpp"

namespace latmu {

// A maximal chain 0-hat = x_0 < x_1 < ... < x_n = 1-hat, consecutive covers.
struct MaximalChain {
    std::vector<int> elements;
    int length() const { return static_cast<int>(elements.size()) - 1; }
};

// Levels of the atom set relative to a maximal chain: levels[i-1] holds the
// positions (into L.atoms()) of the atoms a with a <= x_i, a !<= x_{i-1}.
struct LevelPartition {
    std::vector<std::vector<int>> levels;
    // level index (0-based) per atom position
    std::vector<int> level_of;
};

// y v (x ^ z) == (y v x) ^ z for all y <= z.
bool is_left_modular_element(const FiniteLattice& L, int x);

// Depth-first from 0-hat over covers restricted to left-modular elements,
// preferring lower element indices; first maximal chain found.
std::optional<MaximalChain> find_left_modular_chain(const FiniteLattice& L);

LevelPartition levels_from_chain(const FiniteLattice& L, const MaximalChain& chain);

// a strictly below b iff a lies in an earlier level than b.
AtomOrder induced_atom_order(const FiniteLattice& L, const LevelPartition& levels);

struct LevelConditionResult {
    bool holds = true;
    // on failure: atom positions a, b_1, ..., b_k with a <= join(b_i)
    std::vector<int> witness;
};
LevelConditionResult level_condition_holds(const FiniteLattice& L,
                                           const MaximalChain& chain);

struct LlWitness {
    MaximalChain chain;
    LevelPartition levels;
};
// First left-modular maximal chain (in DFS order) passing the level
// condition, if any.
std::optional<LlWitness> is_ll(const FiniteLattice& L);

// rho(x) = number of levels containing an atom below x; rho(0-hat) = 0.
std::vector<int> generalized_rank(const FiniteLattice& L, const MaximalChain& chain);

// chi(L, t) = sum_x mu(x) t^(n - rho(x)), n = chain length.
IntegerPolynomial characteristic_polynomial(const FiniteLattice& L,
                                            const MaximalChain& chain);

struct LlFactorization {
    IntegerPolynomial chi;       // via the rank summation
    IntegerPolynomial product;   // prod_i (t - |A_i|)
    std::vector<long long> roots;  // level sizes, ascending
    bool equal = false;
};
// Requires the caller to have verified the LL property for (L, chain);
// pass ll_verified = true after a successful is_ll / level check, else
// PreconditionNotVerified is thrown.
LlFactorization ll_factorization_check(const FiniteLattice& L,
                                       const MaximalChain& chain,
                                       const LevelPartition& levels,
                                       bool ll_verified);

// NBB sets under the induced order == atom sets with at most one member
// per level.
bool nbb_level_characterization(const FiniteLattice& L, const MaximalChain& chain);

// Closure of S under meet and join, sorted.
std::vector<int> sublattice_generated(const FiniteLattice& L,
                                      const std::vector<int>& S);

bool is_distributive(const FiniteLattice& L);

// Every maximal chain C: the sublattice generated by chain + C is
// distributive.  |L| <= 200.
bool is_supersolvable_with(const FiniteLattice& L, const MaximalChain& chain);

struct RankComparisonEntry {
    int element = 0;
    int generalized = 0;
    int ordinary = 0;  // longest-chain length from 0-hat
    long long mu = 0;
};
struct RankComparisonReport {
    bool agree_where_mu_nonzero = true;
    std::vector<RankComparisonEntry> disagreements;  // all have mu == 0 if ok
};
RankComparisonReport rank_comparison(const FiniteLattice& L,
                                     const MaximalChain& chain);

// If every circuit with a unique maximal element (under the induced order)
// satisfies join(C) == join(C minus max), the level condition must hold;
// returns false only on a counterexample to that implication.
bool levelcondition_from_circuit_condition(const FiniteLattice& L,
                                           const MaximalChain& chain);

}  // namespace latmu
