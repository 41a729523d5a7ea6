#pragma once

#include <string>
#include <vector>

#include "latent/boolean.hpp"
#include "latent/lattice.hpp"

namespace latent::testing {

// The lattices used across the suites. Element order is part of the
// fixture: canonical answers (first witnesses, greedy choices) depend
// on it.

inline Lattice c2() { return Lattice::from_pairs("c2", {"0", "1"}, {{"0", "1"}}); }

inline Lattice c3() {
    return Lattice::from_pairs("c3", {"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
}

inline Lattice c4() {
    return Lattice::from_pairs("c4", {"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}});
}

inline Lattice c5() {
    return Lattice::from_pairs("c5", {"0", "a", "b", "c", "1"},
                               {{"0", "a"}, {"a", "b"}, {"b", "c"}, {"c", "1"}});
}

// The square: two incomparable midpoints.
inline Lattice sq() {
    return Lattice::from_pairs("sq", {"0", "a", "b", "1"},
                               {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// The eight-element cube, i.e. the powerset of three atoms as a lattice.
inline Lattice b8() { return BooleanAlgebra::powerset(3).lattice(); }

// Downsets of the poset q < s, r < s: the join of the two incomparable
// elements u, v is w, strictly below top.
inline Lattice lam() {
    return Lattice::from_pairs("lam", {"0", "u", "v", "w", "1"},
                               {{"0", "u"}, {"0", "v"}, {"u", "w"}, {"v", "w"}, {"w", "1"}});
}

// Downsets of the poset p < q, p < r: the meet of the two incomparable
// elements x, y is the midpoint m, strictly above bottom.
inline Lattice vee() {
    return Lattice::from_pairs("vee", {"0", "m", "x", "y", "1"},
                               {{"0", "m"}, {"m", "x"}, {"m", "y"}, {"x", "1"}, {"y", "1"}});
}

inline Lattice one() { return Lattice::from_pairs("one", {"*"}, {}); }

inline std::vector<Lattice> catalog() {
    return {c2(), c3(), c4(), c5(), sq(), b8(), lam(), vee()};
}

// Non-lattices and non-distributive lattices for the rejection tests.

inline Lattice n5() {
    return Lattice::from_pairs("n5", {"0", "a", "b", "c", "1"},
                               {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

inline Lattice m3() {
    return Lattice::from_pairs(
        "m3", {"0", "a", "b", "c", "1"},
        {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

}  // namespace latent::testing
