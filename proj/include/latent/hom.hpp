#pragma once

#include <optional>
#include <vector>

#include "latent/boolean.hpp"
#include "latent/lattice.hpp"

namespace latent {

/// Which structure a map is required to preserve.
enum class Flavor { lattice, heyting };

/**
 * A validated structure-preserving map between finite lattices, stored as
 * a value table over the domain carrier. Lattice flavor preserves bounds,
 * meets and joins; heyting flavor also preserves implication.
 */
struct Hom {
    Lattice domain;
    Lattice codomain;
    std::vector<Elem> table;
    Flavor flavor = Flavor::lattice;

    Elem operator()(Elem x) const { return table.at(static_cast<size_t>(x)); }

    friend bool operator==(const Hom& a, const Hom& b) {
        return a.domain == b.domain && a.codomain == b.codomain && a.table == b.table;
    }
};

/// The first violated law of the given table, or nullopt if it is a hom.
struct LawViolation {
    std::string law;  // "size", "bottom", "top", "meet", "join", "implication"
    Elem x = -1, y = -1;
};
std::optional<LawViolation> hom_violation(const std::vector<Elem>& table, const Lattice& domain,
                                          const Lattice& codomain, Flavor flavor);

/// Validates the table and wraps it; throws NotAHom with the violated law
/// and witness pair otherwise.
Hom check_hom(std::vector<Elem> table, Lattice domain, Lattice codomain,
              Flavor flavor = Flavor::lattice);

/// Composition g after f. The codomain of f must equal the domain of g.
Hom compose(const Hom& g, const Hom& f);

/// An injective hom.
struct Embedding {
    Hom hom;
    Elem operator()(Elem x) const { return hom(x); }
};

/// Validates injectivity of an already validated hom.
Embedding check_embedding(Hom hom);

/**
 * Carves the sublattice on the given subset of an ambient lattice. The
 * subset must contain both bounds and be closed under meet and join; its
 * canonical order is inherited from the ambient carrier. Returns the
 * induced lattice together with the inclusion embedding.
 */
std::pair<Lattice, Embedding> sublattice_embedding(const Lattice& ambient,
                                                   std::vector<Elem> subset);

/**
 * The boolean reflection of a finite distributive lattice: the algebra of
 * regular elements (fixed points of double negation, with joins reformed
 * by double negation) together with the double-negation map onto it,
 * which preserves implication.
 */
struct Booleanization {
    BooleanAlgebra algebra;
    Hom map;  // heyting flavor, from the source lattice onto algebra.lattice()
};
Booleanization booleanize(const Lattice& L);

}  // namespace latent
