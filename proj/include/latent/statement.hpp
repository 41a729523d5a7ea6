#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <vector>

#include "latent/boolean.hpp"
#include "latent/hom.hpp"
#include "latent/lattice.hpp"

namespace latent {

/**
 * An atomic assertion "the map sends x to a": x indexes the source
 * lattice, a indexes the value algebra.
 */
struct Statement {
    Elem x;
    Elem a;
    friend auto operator<=>(const Statement&, const Statement&) = default;
};

/// A finite set of statements in canonical order (sorted, deduplicated).
class StatementSet {
public:
    StatementSet() = default;
    explicit StatementSet(std::vector<Statement> items);
    StatementSet(std::initializer_list<Statement> items)
        : StatementSet(std::vector<Statement>(items)) {}

    std::span<const Statement> items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    int size() const { return static_cast<int>(items_.size()); }
    bool empty() const { return items_.empty(); }

    bool contains(const Statement& s) const;
    bool intersects(const StatementSet& other) const;
    /// Copy with one more statement.
    StatementSet with(const Statement& s) const;
    StatementSet united(const StatementSet& other) const;

    friend auto operator<=>(const StatementSet&, const StatementSet&) = default;

private:
    std::vector<Statement> items_;
};

/// The elements paired with a given value.
std::vector<Elem> fiber(const StatementSet& X, Elem a);

struct Sequent {
    StatementSet antecedent;
    StatementSet succedent;
};

/**
 * Everything a decision needs: the source lattice, the boolean value
 * algebra and the flavor of map under consideration.
 */
struct Context {
    Lattice L;
    BooleanAlgebra B;
    Flavor flavor = Flavor::lattice;

    void require(const Statement& s) const;
    void require(const StatementSet& X) const;
    void require(const Sequent& seq) const;
};

}  // namespace latent
