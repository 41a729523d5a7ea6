#pragma once

#include <optional>
#include <vector>

#include "latent/entail.hpp"
#include "latent/statement.hpp"

namespace latent {

/**
 * All maps of the context's flavor from its source lattice into its value
 * algebra, in canonical order (lexicographic by value table).
 *
 * Enumeration goes through the atoms of the value algebra: a map into the
 * algebra is the same as one two-valued map per atom, and the two-valued
 * maps are found by scanning 0/1 labelings of the carrier for bound, meet
 * and join preservation. Heyting flavor additionally filters for
 * implication preservation on the assembled map.
 */
std::vector<Hom> enumerate_homs(const Context& ctx);

/// The graph of a map as a statement set over its context.
StatementSet graph_of(const Hom& alpha);

struct SemanticResult {
    bool entailed;
    /// When not entailed: the first map whose graph contains the antecedent
    /// and avoids the succedent.
    std::optional<Hom> countermodel;
};

/// Decides a sequent by checking every map from enumerate_homs.
SemanticResult semantic_entails(const Context& ctx, const Sequent& seq);
/// Same, over a precomputed model list (for callers that batch decisions).
SemanticResult semantic_entails(const Context& ctx, const Sequent& seq,
                                std::span<const Hom> homs);

/**
 * Greedy extension of alpha: L -> B along the embedding phi: L -> L'.
 * Starts from the graph of alpha pushed through phi, then assigns each
 * unmapped element of L', in canonical order, the first value of B that
 * keeps the statement set consistent. With a boolean value algebra such a
 * value always exists, so the result is a total map extending alpha; it
 * is validated before being returned.
 */
Hom sikorski_extend(const Embedding& phi, const Hom& alpha, const BooleanAlgebra& B);

/// First element without a complement, in canonical order; nullopt when
/// the lattice is complemented.
std::optional<Elem> find_non_complemented(const Lattice& D);

/// How gluing a fourth value d onto the seed clashes with it.
struct ValueRefutation {
    Elem d;
    std::optional<Elem> meet_clash;  // d0 meet d, when it is not bottom
    std::optional<Elem> join_clash;  // d0 join d, when it is not top
};

/**
 * Witness that entailment over a non-complemented value lattice D is not
 * conservative over a sublattice of sources.
 *
 * The seed X lives over the four-element square {00, 01, 10, 11}: it pins
 * 00 to bottom, 11 to top and 01 to a non-complemented d0. Every candidate
 * value d for the remaining corner 10 clashes with the seed: the meet law
 * forces 00 to d0 meet d (nonzero) or the join law forces 11 to d0 join d
 * (nontop), either way against single-valuedness. Cutting the totality of
 * values for 10 refutes X itself. Yet X restricted to the chain
 * {00, 01, 11} is a perfectly good lattice map into D.
 */
struct CounterexampleReport {
    Lattice square;   // the four-element square of sources
    Lattice chain;    // the sublattice {00, 01, 11}
    Embedding chain_inclusion;
    Elem d0;          // in D
    std::vector<Statement> seed;              // (x in square, d in D)
    std::vector<ValueRefutation> refutations; // one per d, in canonical order
    Hom sub_model;                            // chain -> D, validated
};

/// Builds the report, or nullopt when D is complemented.
std::optional<CounterexampleReport> conservativity_counterexample(const Lattice& D);

}  // namespace latent
