#include "latent/hom.hpp"

#include <algorithm>

namespace latent {

std::optional<LawViolation> hom_violation(const std::vector<Elem>& table, const Lattice& domain,
                                          const Lattice& codomain, Flavor flavor) {
    const int n = domain.size();
    if (static_cast<int>(table.size()) != n) return LawViolation{"size"};
    for (Elem v : table)
        if (v < 0 || v >= codomain.size()) return LawViolation{"size"};
    if (table[domain.bottom()] != codomain.bottom())
        return LawViolation{"bottom", domain.bottom(), -1};
    if (table[domain.top()] != codomain.top()) return LawViolation{"top", domain.top(), -1};
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (table[domain.meet(x, y)] != codomain.meet(table[x], table[y]))
                return LawViolation{"meet", x, y};
            if (table[domain.join(x, y)] != codomain.join(table[x], table[y]))
                return LawViolation{"join", x, y};
        }
    if (flavor == Flavor::heyting) {
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                if (table[domain.implication(x, y)] !=
                    codomain.implication(table[x], table[y]))
                    return LawViolation{"implication", x, y};
    }
    return std::nullopt;
}

Hom check_hom(std::vector<Elem> table, Lattice domain, Lattice codomain, Flavor flavor) {
    if (auto v = hom_violation(table, domain, codomain, flavor)) {
        if (v->x < 0) throw NotAHom(v->law);
        std::string x = domain.name_of(v->x);
        std::string y = v->y < 0 ? x : domain.name_of(v->y);
        throw NotAHom(v->law, std::move(x), std::move(y));
    }
    return Hom{std::move(domain), std::move(codomain), std::move(table), flavor};
}

Hom compose(const Hom& g, const Hom& f) {
    if (!(f.codomain == g.domain)) throw InputError("composition: domains do not line up");
    std::vector<Elem> table(f.table.size());
    for (size_t i = 0; i < table.size(); ++i) table[i] = g.table[f.table[i]];
    Flavor flavor =
        (f.flavor == Flavor::heyting && g.flavor == Flavor::heyting) ? Flavor::heyting
                                                                     : Flavor::lattice;
    return Hom{f.domain, g.codomain, std::move(table), flavor};
}

Embedding check_embedding(Hom hom) {
    for (Elem x = 0; x < hom.domain.size(); ++x)
        for (Elem y = x + 1; y < hom.domain.size(); ++y)
            if (hom.table[x] == hom.table[y])
                throw InputError("not injective: '" + hom.domain.name_of(x) + "' and '" +
                                 hom.domain.name_of(y) + "' collide");
    return Embedding{std::move(hom)};
}

std::pair<Lattice, Embedding> sublattice_embedding(const Lattice& ambient,
                                                   std::vector<Elem> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (Elem x : subset)
        if (x < 0 || x >= ambient.size()) throw UnknownElement("#" + std::to_string(x));
    auto member = [&](Elem x) { return std::binary_search(subset.begin(), subset.end(), x); };
    if (!member(ambient.bottom()) || !member(ambient.top())) throw MissingBounds();
    for (Elem x : subset)
        for (Elem y : subset) {
            if (x > y) continue;
            if (!member(ambient.meet(x, y)))
                throw NotClosed(ambient.name_of(x), ambient.name_of(y), true);
            if (!member(ambient.join(x, y)))
                throw NotClosed(ambient.name_of(x), ambient.name_of(y), false);
        }
    const int m = static_cast<int>(subset.size());
    std::vector<std::string> names(m);
    std::vector<std::uint8_t> leq(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        names[i] = ambient.name_of(subset[i]);
        for (int j = 0; j < m; ++j)
            if (ambient.leq(subset[i], subset[j])) leq[i * m + j] = 1;
    }
    Lattice sub = Lattice::from_order(ambient.name() + "|sub", std::move(names), std::move(leq));
    Embedding inc = check_embedding(check_hom(subset, sub, ambient));
    return {std::move(sub), std::move(inc)};
}

Booleanization booleanize(const Lattice& L) {
    std::vector<Elem> regulars;
    for (Elem x = 0; x < L.size(); ++x)
        if (L.regularize(x) == x) regulars.push_back(x);
    const int m = static_cast<int>(regulars.size());
    std::vector<std::string> names(m);
    std::vector<std::uint8_t> leq(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        names[i] = L.name_of(regulars[i]);
        for (int j = 0; j < m; ++j)
            if (L.leq(regulars[i], regulars[j])) leq[i * m + j] = 1;
    }
    Lattice carrier = [&]() -> Lattice {
        try {
            return Lattice::from_order(L.name() + "|regular", std::move(names), std::move(leq));
        } catch (const InputError& e) {
            throw InternalError(std::string("regular elements do not form a lattice: ") +
                                e.what());
        }
    }();
    std::vector<Elem> table(L.size());
    for (Elem x = 0; x < L.size(); ++x) {
        Elem r = L.regularize(x);
        auto it = std::find(regulars.begin(), regulars.end(), r);
        table[x] = static_cast<Elem>(it - regulars.begin());
    }
    Hom map = [&]() -> Hom {
        try {
            return check_hom(std::move(table), L, carrier, Flavor::heyting);
        } catch (const InputError& e) {
            throw InternalError(std::string("double negation is not a heyting map: ") + e.what());
        }
    }();
    return Booleanization{BooleanAlgebra::from_lattice(std::move(carrier)), std::move(map)};
}

}  // namespace latent
