#include "latent/boolean.hpp"

namespace latent {

std::string powerset_name(unsigned mask) {
    if (mask == 0) return "0";
    std::string out;
    for (int i = 0; mask >> i; ++i) {
        if (!(mask & (1u << i))) continue;
        if (!out.empty()) out += '+';
        out += "e" + std::to_string(i + 1);
    }
    return out;
}

BooleanAlgebra BooleanAlgebra::powerset(int n_atoms) {
    if (n_atoms < 1) throw ZeroAtoms();
    // Tables are quadratic in 2^n; anything past this bound is outside the
    // intended desk scale.
    if (n_atoms > 10) throw InputError("powerset algebras are capped at 10 atoms");
    const unsigned n = 1u << n_atoms;
    std::vector<std::string> names(n);
    std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
    for (unsigned i = 0; i < n; ++i) {
        names[i] = powerset_name(i);
        for (unsigned j = 0; j < n; ++j)
            if ((i & j) == i) leq[i * n + j] = 1;
    }
    BooleanAlgebra alg;
    alg.lat_ = Lattice::from_order("powerset:" + std::to_string(n_atoms), std::move(names),
                                   std::move(leq));
    alg.compl_.resize(n);
    for (unsigned i = 0; i < n; ++i) alg.compl_[i] = static_cast<Elem>(i ^ (n - 1));
    for (int i = 0; i < n_atoms; ++i) alg.atoms_.push_back(static_cast<Elem>(1u << i));
    alg.validate();
    return alg;
}

BooleanAlgebra BooleanAlgebra::from_lattice(Lattice lat) {
    BooleanAlgebra alg;
    alg.lat_ = std::move(lat);
    const Lattice& L = alg.lat_;
    alg.compl_.resize(L.size());
    for (Elem x = 0; x < L.size(); ++x) {
        Elem found = -1;
        for (Elem y = 0; y < L.size(); ++y)
            if (L.meet(x, y) == L.bottom() && L.join(x, y) == L.top()) {
                found = y;
                break;
            }
        if (found == -1)
            throw InternalError("carrier is not boolean: '" + L.name_of(x) + "' has no complement");
        alg.compl_[x] = found;
    }
    for (Elem x = 0; x < L.size(); ++x) {
        if (x == L.bottom()) continue;
        bool minimal = true;
        for (Elem y = 0; y < L.size(); ++y)
            if (y != x && y != L.bottom() && L.leq(y, x)) minimal = false;
        if (minimal) alg.atoms_.push_back(x);
    }
    alg.validate();
    return alg;
}

void BooleanAlgebra::validate() const {
    const Lattice& L = lat_;
    if (atoms_.empty()) throw InternalError("boolean algebra without atoms");
    for (Elem e : atoms_) {
        if (e == L.bottom()) throw InternalError("bottom listed as an atom");
        for (Elem y = 0; y < L.size(); ++y)
            if (y != e && y != L.bottom() && L.leq(y, e))
                throw InternalError("atom '" + L.name_of(e) + "' is not minimal");
    }
    for (Elem x = 0; x < L.size(); ++x) {
        Elem c = compl_[x];
        if (L.meet(x, c) != L.bottom() || L.join(x, c) != L.top())
            throw InternalError("complement law fails at '" + L.name_of(x) + "'");
        Elem acc = L.bottom();
        for (Elem e : atoms_)
            if (L.leq(e, x)) acc = L.join(acc, e);
        if (acc != x)
            throw InternalError("'" + L.name_of(x) + "' is not the join of the atoms below it");
        for (Elem e : atoms_) {
            bool below = L.leq(e, x), below_c = L.leq(e, c);
            if (below == below_c)
                throw InternalError("atom dichotomy fails at '" + L.name_of(e) + "'");
        }
    }
}

}  // namespace latent
