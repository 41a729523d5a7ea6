#pragma once

#include <stdexcept>
#include <string>

namespace latent {

/**
 * Input-level failure: a malformed document, an invalid structure, or a
 * name that does not belong to the carrier at hand. The command line tool
 * maps every InputError to exit code 2.
 */
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A broken internal invariant. These are raised when a property that is
 * guaranteed by construction fails to hold, and always indicate a bug in
 * this library rather than a problem with the input. Exit code 3.
 */
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Antisymmetry failed: a <= b and b <= a for distinct a, b.
struct NotAPoset : InputError {
    std::string a, b;
    NotAPoset(std::string a_, std::string b_)
        : InputError("not a poset: antisymmetry fails between '" + a_ + "' and '" + b_ + "'"),
          a(std::move(a_)), b(std::move(b_)) {}
};

// Some pair of elements has no meet or no join.
struct NotALattice : InputError {
    std::string a, b;
    bool missing_meet;  // false: missing join
    NotALattice(std::string a_, std::string b_, bool missing_meet_)
        : InputError("not a lattice: '" + a_ + "' and '" + b_ + "' have no " +
                     (missing_meet_ ? "meet" : "join")),
          a(std::move(a_)), b(std::move(b_)), missing_meet(missing_meet_) {}
};

// A triple witnessing failure of the meet-over-join distributive law.
struct NotDistributive : InputError {
    std::string x, y, z;
    NotDistributive(std::string x_, std::string y_, std::string z_)
        : InputError("not distributive: witness x='" + x_ + "' y='" + y_ + "' z='" + z_ + "'"),
          x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
};

struct UnknownElement : InputError {
    std::string name;
    explicit UnknownElement(std::string name_)
        : InputError("unknown element '" + name_ + "'"), name(std::move(name_)) {}
};

// A statement or document refers to an element outside the context.
struct ForeignElement : InputError {
    std::string name;
    explicit ForeignElement(std::string name_)
        : InputError("foreign element '" + name_ + "'"), name(std::move(name_)) {}
};

struct ZeroAtoms : InputError {
    ZeroAtoms() : InputError("a boolean algebra needs at least one atom") {}
};

// A would-be sublattice is missing the bounds of the ambient lattice.
struct MissingBounds : InputError {
    MissingBounds() : InputError("subset must contain the bottom and top of the ambient lattice") {}
};

// A would-be sublattice is not closed under meet or join.
struct NotClosed : InputError {
    std::string a, b;
    bool under_meet;  // false: escapes under join
    NotClosed(std::string a_, std::string b_, bool under_meet_)
        : InputError("subset not closed: the " + std::string(under_meet_ ? "meet" : "join") +
                     " of '" + a_ + "' and '" + b_ + "' lies outside it"),
          a(std::move(a_)), b(std::move(b_)), under_meet(under_meet_) {}
};

// A table fails one of the homomorphism laws; carries the violated law
// ("bottom", "top", "meet", "join" or "implication") and the witness pair.
struct NotAHom : InputError {
    std::string law;
    std::string x, y;
    NotAHom(std::string law_, std::string x_, std::string y_)
        : InputError("not a homomorphism: " + law_ + " law fails at ('" + x_ + "', '" + y_ + "')"),
          law(std::move(law_)), x(std::move(x_)), y(std::move(y_)) {}
    explicit NotAHom(std::string law_)
        : InputError("not a homomorphism: " + law_ + " is not preserved"), law(std::move(law_)) {}
};

// The seed of an extension problem is already inconsistent.
struct InvalidSeed : InputError {
    explicit InvalidSeed(const std::string& detail)
        : InputError("invalid extension seed: " + detail) {}
};

struct ParseError : InputError {
    std::string file;
    ParseError(std::string file_, const std::string& reason)
        : InputError(file_ + ": " + reason), file(std::move(file_)) {}
};

// Algebra generation is meaningless over a one-element lattice.
struct DegenerateLattice : InputError {
    DegenerateLattice() : InputError("degenerate lattice: bottom equals top") {}
};

// Class discovery exceeded the configured bound.
struct ClassCapExceeded : InputError {
    int cap;
    explicit ClassCapExceeded(int cap_)
        : InputError("generated algebra exceeds the class cap of " + std::to_string(cap_)),
          cap(cap_) {}
};

// The given statement map violates the interpretation law.
struct NotAnInterpretation : InputError {
    explicit NotAnInterpretation(const std::string& witness)
        : InputError("not an interpretation: " + witness) {}
};

// The factored map is not well defined on the generated carrier.
struct IllDefined : InputError {
    explicit IllDefined(const std::string& detail)
        : InputError("factored map is ill defined: " + detail) {}
};

}  // namespace latent
