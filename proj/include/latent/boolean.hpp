#pragma once

#include <string>
#include <vector>

#include "latent/lattice.hpp"

namespace latent {

/**
 * A finite boolean algebra, kept as its underlying lattice together with
 * the atom list and the complement table.
 *
 * The canonical construction is powerset(n): elements are the subsets of
 * n atoms e1..en, identified with bit masks, listed in mask order and
 * named "0" or by joining the member atoms with '+' ("e1+e3"). Any
 * complemented distributive lattice can be wrapped via from_lattice,
 * which keeps the element names of the given carrier.
 */
class BooleanAlgebra {
public:
    /// An empty placeholder, like Lattice().
    BooleanAlgebra() = default;

    /// The powerset algebra over atoms e1..en. Requires n >= 1.
    static BooleanAlgebra powerset(int n_atoms);

    /// Wraps a lattice in which every element has a complement. Meant for
    /// carriers that are boolean by construction; a missing complement is
    /// reported as an internal error.
    static BooleanAlgebra from_lattice(Lattice lat);

    const Lattice& lattice() const { return lat_; }
    int size() const { return lat_.size(); }

    /// Atoms in canonical order.
    const std::vector<Elem>& atoms() const { return atoms_; }
    Elem complement(Elem a) const { return compl_.at(static_cast<size_t>(a)); }

    /// Full invariant audit: atom minimality, complement laws, the atom
    /// decomposition of every element, and the dichotomy that each atom
    /// lies below exactly one of a and complement(a). Throws InternalError
    /// on any failure.
    void validate() const;

    friend bool operator==(const BooleanAlgebra& a, const BooleanAlgebra& b) {
        return a.lat_ == b.lat_ && a.atoms_ == b.atoms_ && a.compl_ == b.compl_;
    }

private:
    Lattice lat_;
    std::vector<Elem> atoms_;
    std::vector<Elem> compl_;
};

/// Canonical element name for a subset of atoms given as a bit mask.
std::string powerset_name(unsigned mask);

}  // namespace latent
