#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latent/error.hpp"

namespace latent {

/// Index of an element in a carrier, in canonical (input) order.
using Elem = int;

/**
 * A finite bounded distributive lattice.
 *
 * The carrier is a list of named elements; the order, meet and join are
 * dense tables indexed by position. Construction validates everything:
 * the relation must be a partial order after reflexive-transitive
 * closure, every pair must have a meet and a join, and the distributive
 * law must hold on all triples. A one-element lattice is accepted.
 *
 * All tie-breaking follows the canonical order, i.e. the order in which
 * elements were listed at construction time. Instances are immutable.
 */
class Lattice {
public:
    /// An empty placeholder; every accessor throws until a real lattice is
    /// assigned over it. Exists so that values can sit in aggregates.
    Lattice() = default;

    /// Builds from a generating set of order pairs. The relation is closed
    /// reflexively and transitively before validation.
    static Lattice from_pairs(std::string name, std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& leq_pairs);

    /// Builds from a full order relation, given row-major as leq[i*n + j].
    /// The relation must already be reflexive, antisymmetric and transitive.
    static Lattice from_order(std::string name, std::vector<std::string> elements,
                              std::vector<std::uint8_t> leq);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& element_names() const { return names_; }
    const std::string& name_of(Elem x) const { check(x); return names_[x]; }

    std::optional<Elem> find(std::string_view name) const;
    /// Like find, but throws UnknownElement on a miss.
    Elem index_of(std::string_view name) const;

    bool leq(Elem x, Elem y) const { check(x); check(y); return leq_[x * size() + y] != 0; }
    Elem meet(Elem x, Elem y) const { check(x); check(y); return meet_[x * size() + y]; }
    Elem join(Elem x, Elem y) const { check(x); check(y); return join_[x * size() + y]; }
    Elem bottom() const { return bottom_; }
    Elem top() const { return top_; }

    /// Meet of a finite family; the empty family yields top.
    Elem meet_all(std::span<const Elem> xs) const;
    /// Join of a finite family; the empty family yields bottom.
    Elem join_all(std::span<const Elem> xs) const;

    /// Join-irreducible elements in canonical order. Every element is the
    /// join of the irreducibles below it; this is checked at construction.
    const std::vector<Elem>& irreducibles() const { return irreducibles_; }

    /// Relative pseudo-complement: the largest z with z and x below y.
    Elem implication(Elem x, Elem y) const;
    /// implication(x, bottom)
    Elem negation(Elem x) const { return implication(x, bottom_); }
    /// Double negation.
    Elem regularize(Elem x) const { return negation(negation(x)); }

    /// Structural equality: same element names in the same order and the
    /// same order relation. The display name is ignored.
    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.names_ == b.names_ && a.leq_ == b.leq_;
    }

private:
    void check(Elem x) const {
        if (x < 0 || x >= size()) throw UnknownElement("#" + std::to_string(x));
    }

    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::uint8_t> leq_;
    std::vector<Elem> meet_, join_;
    Elem bottom_ = 0, top_ = 0;
    std::vector<Elem> irreducibles_;
};

}  // namespace latent
