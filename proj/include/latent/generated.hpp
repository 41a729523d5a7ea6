#pragma once

#include <vector>

#include "latent/entail.hpp"
#include "latent/statement.hpp"

namespace latent {

/**
 * A formal join of formal meets of statements, the syntactic shape every
 * lattice term over statements reduces to. Disjuncts are statement sets
 * in canonical order; the empty disjunct list is bottom and a DNF
 * containing the empty disjunct is top.
 */
struct FormalDNF {
    std::vector<StatementSet> disjuncts;

    static FormalDNF bottom() { return {}; }
    static FormalDNF top() { return {{StatementSet{}}}; }
    static FormalDNF of(const Statement& s) { return {{StatementSet{s}}}; }

    friend auto operator<=>(const FormalDNF&, const FormalDNF&) = default;
};

/// Sorts and deduplicates disjuncts, drops inconsistent ones (they denote
/// bottom) and drops disjuncts subsumed by a subset disjunct (absorption).
FormalDNF dnf_canonical(const Context& ctx, FormalDNF d);

/// Multiplies out: pairwise unions of disjuncts.
FormalDNF dnf_meet(const Context& ctx, const FormalDNF& a, const FormalDNF& b);
/// Concatenates disjunct lists.
FormalDNF dnf_join(const Context& ctx, const FormalDNF& a, const FormalDNF& b);

/**
 * Decides the order between formal DNFs: a <= b exactly when every
 * disjunct X of a entails every choice set of b (one statement picked
 * from each disjunct of b). A choice over an empty disjunct list is the
 * single empty pick, and an empty disjunct in b admits no picks at all,
 * matching the bottom and top readings above.
 */
bool dnf_leq(const Context& ctx, const FormalDNF& a, const FormalDNF& b);

/**
 * The boolean algebra generated by the statements of a lattice over the
 * two-element value algebra, together with the unit map from statements
 * to its carrier.
 *
 * Found by closing the singleton-statement classes under meet and join,
 * identifying DNFs that compare equal both ways under dnf_leq. The closed
 * family is verified to be a complemented distributive lattice and is
 * relabeled along its atom decomposition, so the carrier is a powerset
 * algebra whose atoms are numbered in discovery order.
 */
struct GeneratedAlgebra {
    BooleanAlgebra carrier;
    /// Statement (x, a) -> carrier element, indexed x * 2 + a.
    std::vector<Elem> unit;
    /// A representative DNF per carrier element (first discovered).
    std::vector<FormalDNF> reps;
    /// x -> unit(x, top of the two-element algebra); injective and order
    /// reflecting.
    Embedding embedding;

    Elem unit_of(Elem x, Elem a) const { return unit.at(static_cast<size_t>(x) * 2 + a); }
};

GeneratedAlgebra generate_boolean_algebra(const Lattice& L, int max_classes = 4096);

/**
 * Factors a statement map f through the unit of a generated algebra:
 * returns f' with f' after unit = f, where f'(class) evaluates the class
 * representative under f. The map f must send entailed sequents to order
 * (checked exhaustively on small sequents, by sampling beyond that), and
 * the factored table must come out a lattice map; violations raise
 * NotAnInterpretation and IllDefined respectively.
 */
Hom factor_interpretation(const Context& ctx, const Lattice& target,
                          const std::vector<Elem>& f, const GeneratedAlgebra& G);

}  // namespace latent
