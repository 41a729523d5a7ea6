#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "latent/boolean.hpp"
#include "latent/lattice.hpp"
#include "latent/statement.hpp"

namespace latent {

/**
 * Lattice document:
 *   {"name": "...", "elements": ["...", ...], "leq": [["a", "b"], ...]}
 * The listed pairs generate the order; closure and validation happen in
 * the lattice builder.
 */
Lattice load_lattice(const std::filesystem::path& file);

/**
 * Map document: {"map": {"x": "y", ...}} read against a domain and a
 * codomain carrier. Every domain element must be covered and every name
 * resolved; unresolved names raise ForeignElement.
 */
std::vector<Elem> load_map(const std::filesystem::path& file, const Lattice& domain,
                           const Lattice& codomain);

/**
 * Sequent document:
 *   {"antecedent": [["x", "a"], ...], "succedent": [["y", "b"], ...]}
 * with source elements on the left of each pair and value-algebra
 * elements on the right.
 */
Sequent load_sequent(const std::filesystem::path& file, const Context& ctx);

/// Value-algebra spec, currently "powerset:N".
BooleanAlgebra parse_algebra_spec(std::string_view spec);

}  // namespace latent
