#pragma once

#include <vector>

#include "latmu/lattice.hpp"
#include "latmu/mobius.hpp"

namespace latmu::testing {

// Seven-element fixture: 0 < a,b,c; x covers a,b; y covers b,c; 1 covers
// x,y.  Indices: 0:0-hat 1:a 2:b 3:c 4:x 5:y 6:1-hat.
inline FiniteLattice fig_lattice() {
    CoverList cl;
    cl.size = 7;
    cl.labels = {"0", "a", "b", "c", "x", "y", "1"};
    cl.covers = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4},
                 {2, 5}, {3, 5}, {4, 6}, {5, 6}};
    return FiniteLattice::from_covers(cl);
}

// The atom order b strictly below a and c (atoms indexed a=0, b=1, c=2
// within the atom list).
inline AtomOrder fig_order(const FiniteLattice& L) {
    AtomOrder ord = AtomOrder::empty_on(L);
    ord.set_below(1, 0);
    ord.set_below(1, 2);
    ord.validate();
    return ord;
}

// Six-element lattice: the eight-element Boolean algebra minus two
// co-atoms.  Atomic and chain-left-modular but not ranked.
inline FiniteLattice six_element_lattice() {
    CoverList cl;
    cl.size = 6;
    cl.labels = {"0", "a", "b", "c", "ab", "1"};
    cl.covers = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {4, 5}, {3, 5}};
    return FiniteLattice::from_covers(cl);
}

// Pentagon N5: not semimodular, not distributive.
inline FiniteLattice pentagon() {
    CoverList cl;
    cl.size = 5;
    cl.labels = {"0", "a", "b", "c", "1"};
    cl.covers = {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}};
    return FiniteLattice::from_covers(cl);
}

// Diamond M3: three atoms, modular, not distributive.
inline FiniteLattice diamond() {
    CoverList cl;
    cl.size = 5;
    cl.labels = {"0", "a", "b", "c", "1"};
    cl.covers = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    return FiniteLattice::from_covers(cl);
}

}  // namespace latmu::testing
