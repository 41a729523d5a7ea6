#include "latent/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace latent {

namespace {

// Greatest common lower (lower=true) or least common upper bound of x and y
// under the given relation, or -1 if there is none.
Elem extremal_bound(const std::vector<std::uint8_t>& leq, int n, Elem x, Elem y, bool lower) {
    auto le = [&](Elem a, Elem b) { return leq[a * n + b] != 0; };
    Elem best = -1;
    for (Elem z = 0; z < n; ++z) {
        bool bound = lower ? (le(z, x) && le(z, y)) : (le(x, z) && le(y, z));
        if (!bound) continue;
        if (best == -1 || (lower ? le(best, z) : le(z, best))) best = z;
    }
    if (best == -1) return -1;
    // best must dominate every other bound, otherwise the bound set has no
    // extremum and the pair has no meet/join.
    for (Elem z = 0; z < n; ++z) {
        bool bound = lower ? (le(z, x) && le(z, y)) : (le(x, z) && le(y, z));
        if (bound && !(lower ? le(z, best) : le(best, z))) return -1;
    }
    return best;
}

}  // namespace

Lattice Lattice::from_pairs(std::string name, std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
    const int n = static_cast<int>(elements.size());
    std::unordered_map<std::string_view, Elem> index;
    for (Elem i = 0; i < n; ++i) {
        if (!index.emplace(elements[i], i).second)
            throw InputError("duplicate element '" + elements[i] + "'");
    }
    std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
    for (Elem i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (const auto& [a, b] : leq_pairs) {
        auto ia = index.find(a);
        if (ia == index.end()) throw UnknownElement(a);
        auto ib = index.find(b);
        if (ib == index.end()) throw UnknownElement(b);
        leq[ia->second * n + ib->second] = 1;
    }
    // Reflexive-transitive closure.
    for (Elem k = 0; k < n; ++k)
        for (Elem i = 0; i < n; ++i) {
            if (!leq[i * n + k]) continue;
            for (Elem j = 0; j < n; ++j)
                if (leq[k * n + j]) leq[i * n + j] = 1;
        }
    for (Elem i = 0; i < n; ++i)
        for (Elem j = i + 1; j < n; ++j)
            if (leq[i * n + j] && leq[j * n + i]) throw NotAPoset(elements[i], elements[j]);
    return from_order(std::move(name), std::move(elements), std::move(leq));
}

Lattice Lattice::from_order(std::string name, std::vector<std::string> elements,
                            std::vector<std::uint8_t> leq) {
    Lattice lat;
    const int n = static_cast<int>(elements.size());
    if (n == 0) throw InputError("a lattice needs at least one element");
    if (leq.size() != static_cast<size_t>(n) * n)
        throw InternalError("order relation has the wrong shape");
    for (Elem i = 0; i < n; ++i)
        if (!leq[i * n + i]) throw InternalError("order relation is not reflexive");
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j) {
            if (i != j && leq[i * n + j] && leq[j * n + i])
                throw InternalError("order relation is not antisymmetric");
            if (!leq[i * n + j]) continue;
            for (Elem k = 0; k < n; ++k)
                if (leq[j * n + k] && !leq[i * n + k])
                    throw InternalError("order relation is not transitive");
        }

    lat.name_ = std::move(name);
    lat.names_ = std::move(elements);
    lat.leq_ = std::move(leq);
    lat.meet_.assign(static_cast<size_t>(n) * n, 0);
    lat.join_.assign(static_cast<size_t>(n) * n, 0);
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j) {
            Elem m = extremal_bound(lat.leq_, n, i, j, true);
            if (m == -1) throw NotALattice(lat.names_[i], lat.names_[j], true);
            Elem v = extremal_bound(lat.leq_, n, i, j, false);
            if (v == -1) throw NotALattice(lat.names_[i], lat.names_[j], false);
            lat.meet_[i * n + j] = m;
            lat.join_[i * n + j] = v;
        }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z) {
                Elem lhs = lat.meet_[x * n + lat.join_[y * n + z]];
                Elem rhs = lat.join_[lat.meet_[x * n + y] * n + lat.meet_[x * n + z]];
                if (lhs != rhs) throw NotDistributive(lat.names_[x], lat.names_[y], lat.names_[z]);
            }

    lat.bottom_ = 0;
    lat.top_ = 0;
    for (Elem i = 1; i < n; ++i) {
        lat.bottom_ = lat.meet_[lat.bottom_ * n + i];
        lat.top_ = lat.join_[lat.top_ * n + i];
    }

    // x is join-irreducible when it differs from the join of its strict
    // lower set (which rules out bottom as well).
    for (Elem x = 0; x < n; ++x) {
        Elem below = lat.bottom_;
        for (Elem y = 0; y < n; ++y)
            if (y != x && lat.leq_[y * n + x]) below = lat.join_[below * n + y];
        if (below != x) lat.irreducibles_.push_back(x);
    }
    for (Elem x = 0; x < n; ++x) {
        Elem acc = lat.bottom_;
        for (Elem p : lat.irreducibles_)
            if (lat.leq_[p * n + x]) acc = lat.join_[acc * n + p];
        if (acc != x) throw InternalError("element is not the join of the irreducibles below it");
    }
    return lat;
}

std::optional<Elem> Lattice::find(std::string_view name) const {
    for (Elem i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Elem Lattice::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownElement(std::string(name));
}

Elem Lattice::meet_all(std::span<const Elem> xs) const {
    Elem acc = top_;
    for (Elem x : xs) acc = meet(acc, x);
    return acc;
}

Elem Lattice::join_all(std::span<const Elem> xs) const {
    Elem acc = bottom_;
    for (Elem x : xs) acc = join(acc, x);
    return acc;
}

Elem Lattice::implication(Elem x, Elem y) const {
    check(x);
    check(y);
    Elem acc = bottom_;
    for (Elem z = 0; z < size(); ++z)
        if (leq(meet(z, x), y)) acc = join(acc, z);
    return acc;
}

}  // namespace latent
