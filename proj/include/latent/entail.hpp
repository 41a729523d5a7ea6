#pragma once

#include <optional>
#include <vector>

#include "latent/statement.hpp"

namespace latent {

/**
 * Certificate that a statement set is inconsistent: at the given atom of
 * the value algebra, the meet of the elements asserted above the atom
 * sits below the join of the elements asserted below its complement.
 */
struct InconsistencyWitness {
    Elem atom;  // in the value algebra
    Elem lhs;   // in the source lattice, lhs <= rhs
    Elem rhs;
};

/**
 * Decides whether X is inconsistent, scanning the atoms of the value
 * algebra in canonical order and returning the first witness found.
 *
 * For each atom e, every statement (x, a) contributes x to exactly one
 * side: to the meet when e lies below a, to the join when e lies below
 * the complement of a. The empty meet is top, the empty join is bottom.
 * In heyting flavor each contribution is replaced by its double negation
 * and the join is regularized once more, so that it is formed among the
 * regular elements.
 */
std::optional<InconsistencyWitness> find_inconsistency(const Context& ctx,
                                                       const StatementSet& X);

struct EntailsResult {
    bool entailed;
    /// When not entailed: the first value tuple whose augmented antecedent
    /// stays consistent, one value per succedent statement.
    std::optional<std::vector<Elem>> failing_tuple;
};

/**
 * Decides the sequent X |- Y. The sequent holds exactly when for every
 * tuple of shifted values (one value b' != b per succedent statement
 * (y, b)), the antecedent extended by the shifted statements is
 * inconsistent. Tuples are scanned in canonical order, first statement
 * slowest; a branch whose prefix is already inconsistent is not expanded
 * further, which is sound because inconsistency is monotone.
 */
EntailsResult entails(const Context& ctx, const Sequent& seq);

/// One inconsistency certificate per shifted-value tuple, in canonical
/// tuple order. Only valid for sequents that are entailed; meant for
/// rendering, so the succedent should be small.
struct TupleWitness {
    std::vector<Elem> values;
    InconsistencyWitness witness;
};
std::vector<TupleWitness> entails_witnesses(const Context& ctx, const Sequent& seq);

/// Pushes statements through a lattice map on the source side.
StatementSet interpret(const Hom& phi, const StatementSet& X);
Sequent interpret(const Hom& phi, const Sequent& seq);

}  // namespace latent
