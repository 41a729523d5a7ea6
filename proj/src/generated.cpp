#include "latent/generated.hpp"

#include <algorithm>
#include <map>

#include "latent/models.hpp"

namespace latent {

FormalDNF dnf_canonical(const Context& ctx, FormalDNF d) {
    std::vector<StatementSet> kept;
    for (StatementSet& X : d.disjuncts) {
        if (find_inconsistency(ctx, X)) continue;
        kept.push_back(std::move(X));
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    // Absorption: a disjunct with a proper subset disjunct is redundant.
    std::vector<StatementSet> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        bool subsumed = false;
        for (size_t j = 0; j < kept.size() && !subsumed; ++j) {
            if (i == j || kept[j].size() > kept[i].size()) continue;
            bool subset = true;
            for (const Statement& s : kept[j])
                if (!kept[i].contains(s)) {
                    subset = false;
                    break;
                }
            subsumed = subset && !(kept[j] == kept[i]);
        }
        if (!subsumed) out.push_back(kept[i]);
    }
    return FormalDNF{std::move(out)};
}

FormalDNF dnf_meet(const Context& ctx, const FormalDNF& a, const FormalDNF& b) {
    FormalDNF out;
    for (const StatementSet& X : a.disjuncts)
        for (const StatementSet& Y : b.disjuncts) out.disjuncts.push_back(X.united(Y));
    return dnf_canonical(ctx, std::move(out));
}

FormalDNF dnf_join(const Context& ctx, const FormalDNF& a, const FormalDNF& b) {
    FormalDNF out = a;
    out.disjuncts.insert(out.disjuncts.end(), b.disjuncts.begin(), b.disjuncts.end());
    return dnf_canonical(ctx, std::move(out));
}

bool dnf_leq(const Context& ctx, const FormalDNF& a, const FormalDNF& b) {
    for (const StatementSet& X : a.disjuncts) {
        // Scan the choice sets of b; a factor with an empty disjunct kills
        // the whole scan (b is top), no disjuncts at all yields one empty
        // choice (b is bottom).
        std::vector<int> pick(b.disjuncts.size(), 0);
        bool open = true;
        for (const StatementSet& Y : b.disjuncts)
            if (Y.empty()) open = false;
        if (!open) continue;
        for (;;) {
            std::vector<Statement> choice;
            for (size_t j = 0; j < b.disjuncts.size(); ++j)
                choice.push_back(b.disjuncts[j].items()[pick[j]]);
            if (!entails(ctx, Sequent{X, StatementSet(std::move(choice))}).entailed)
                return false;
            size_t j = b.disjuncts.size();
            while (j > 0) {
                if (++pick[j - 1] < b.disjuncts[j - 1].size()) break;
                pick[j - 1] = 0;
                --j;
            }
            if (j == 0) break;
        }
    }
    return true;
}

namespace {

struct Closure {
    Context ctx;
    int cap;
    std::vector<FormalDNF> reps;
    std::vector<std::vector<std::uint8_t>> le;  // le[i][j]: class i <= class j
    std::map<FormalDNF, int> memo;

    int class_of(FormalDNF d) {
        d = dnf_canonical(ctx, std::move(d));
        if (auto it = memo.find(d); it != memo.end()) return it->second;
        const int n = static_cast<int>(reps.size());
        std::vector<std::uint8_t> below(n), above(n);
        for (int c = 0; c < n; ++c) {
            below[c] = dnf_leq(ctx, d, reps[c]);
            above[c] = dnf_leq(ctx, reps[c], d);
            if (below[c] && above[c]) {
                memo.emplace(std::move(d), c);
                return c;
            }
        }
        if (n >= cap) throw ClassCapExceeded(cap);
        for (int c = 0; c < n; ++c) le[c].push_back(above[c]);
        below.push_back(1);
        le.push_back(std::move(below));
        reps.push_back(d);
        memo.emplace(std::move(d), n);
        return n;
    }
};

}  // namespace

GeneratedAlgebra generate_boolean_algebra(const Lattice& L, int max_classes) {
    if (L.size() == 1) throw DegenerateLattice();
    Context ctx{L, BooleanAlgebra::powerset(1), Flavor::lattice};

    Closure cl{ctx, max_classes, {}, {}, {}};
    std::vector<Elem> unit(static_cast<size_t>(L.size()) * 2);
    for (Elem x = 0; x < L.size(); ++x)
        for (Elem a = 0; a < 2; ++a)
            unit[static_cast<size_t>(x) * 2 + a] = cl.class_of(FormalDNF::of({x, a}));

    // Close under meet and join until nothing new turns up.
    for (size_t frontier = 0; frontier < cl.reps.size();) {
        const size_t known = cl.reps.size();
        for (size_t i = 0; i < known; ++i)
            for (size_t j = std::max(i, frontier); j < known; ++j) {
                cl.class_of(dnf_meet(ctx, cl.reps[i], cl.reps[j]));
                cl.class_of(dnf_join(ctx, cl.reps[i], cl.reps[j]));
            }
        frontier = known;
    }

    const int n = static_cast<int>(cl.reps.size());
    std::vector<std::string> names(n);
    std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        names[i] = "c" + std::to_string(i);
        for (int j = 0; j < n; ++j) leq[i * n + j] = cl.le[i][j];
    }
    Lattice raw = [&]() -> Lattice {
        try {
            return Lattice::from_order(L.name() + "|generated", std::move(names),
                                       std::move(leq));
        } catch (const InputError& e) {
            throw InternalError(std::string("generated classes do not form a lattice: ") +
                                e.what());
        }
    }();
    if (auto bad = find_non_complemented(raw))
        throw InternalError("generated class '" + raw.name_of(*bad) + "' has no complement");
    BooleanAlgebra raw_alg = BooleanAlgebra::from_lattice(raw);

    // Relabel along the atom decomposition: class -> mask of atoms below.
    const int k = static_cast<int>(raw_alg.atoms().size());
    if ((1 << k) != n) throw InternalError("generated class count is not a power of two");
    std::vector<Elem> mask_of(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    for (int c = 0; c < n; ++c) {
        unsigned mask = 0;
        for (int bit = 0; bit < k; ++bit)
            if (raw.leq(raw_alg.atoms()[bit], c)) mask |= 1u << bit;
        mask_of[c] = static_cast<Elem>(mask);
        if (seen[mask]) throw InternalError("two generated classes share an atom set");
        seen[mask] = 1;
    }
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            if (raw.leq(c, d) != ((mask_of[c] & mask_of[d]) == mask_of[c]))
                throw InternalError("atom relabeling does not preserve the class order");

    GeneratedAlgebra G;
    G.carrier = BooleanAlgebra::powerset(k);
    G.unit.resize(unit.size());
    G.reps.resize(n);
    for (size_t s = 0; s < unit.size(); ++s) G.unit[s] = mask_of[unit[s]];
    for (int c = 0; c < n; ++c) G.reps[mask_of[c]] = cl.reps[c];

    std::vector<Elem> emb(L.size());
    for (Elem x = 0; x < L.size(); ++x) emb[x] = G.unit_of(x, 1);
    for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y)
            if (L.leq(x, y) != G.carrier.lattice().leq(emb[x], emb[y]))
                throw InternalError("the unit at top value does not reflect the source order");
    G.embedding = [&]() -> Embedding {
        try {
            return check_embedding(check_hom(std::move(emb), L, G.carrier.lattice()));
        } catch (const InputError& e) {
            throw InternalError(std::string("the unit at top value is not an embedding: ") +
                                e.what());
        }
    }();
    return G;
}

Hom factor_interpretation(const Context& ctx, const Lattice& target,
                          const std::vector<Elem>& f, const GeneratedAlgebra& G) {
    if (ctx.B.size() != 2) throw InputError("factoring needs the two-element value algebra");
    if (f.size() != static_cast<size_t>(ctx.L.size()) * 2)
        throw InputError("statement map has the wrong shape");
    for (Elem v : f)
        if (v < 0 || v >= target.size()) throw ForeignElement("#" + std::to_string(v));

    // Interpretation law on every small sequent of the context.
    std::vector<Statement> all;
    for (Elem x = 0; x < ctx.L.size(); ++x)
        for (Elem a = 0; a < 2; ++a) all.push_back({x, a});
    auto image_holds = [&](const StatementSet& X, const StatementSet& Y) {
        Elem lhs = target.top();
        for (const Statement& s : X) lhs = target.meet(lhs, f[s.x * 2 + s.a]);
        Elem rhs = target.bottom();
        for (const Statement& s : Y) rhs = target.join(rhs, f[s.x * 2 + s.a]);
        return target.leq(lhs, rhs);
    };
    std::vector<StatementSet> small = {StatementSet{}};
    for (size_t i = 0; i < all.size(); ++i) {
        small.push_back(StatementSet{all[i]});
        for (size_t j = i + 1; j < all.size(); ++j)
            small.push_back(StatementSet{all[i], all[j]});
    }
    for (const StatementSet& X : small)
        for (const StatementSet& Y : small) {
            if (entails(ctx, Sequent{X, Y}).entailed && !image_holds(X, Y))
                throw NotAnInterpretation("an entailed sequent maps outside the order");
        }

    std::vector<Elem> table(G.carrier.size());
    for (Elem c = 0; c < G.carrier.size(); ++c) {
        Elem acc = target.bottom();
        for (const StatementSet& X : G.reps[c].disjuncts) {
            Elem d = target.top();
            for (const Statement& s : X) d = target.meet(d, f[s.x * 2 + s.a]);
            acc = target.join(acc, d);
        }
        table[c] = acc;
    }
    for (size_t s = 0; s < f.size(); ++s)
        if (table[G.unit[s]] != f[s])
            throw IllDefined("the factored table disagrees with the map on a generator");
    try {
        return check_hom(std::move(table), G.carrier.lattice(), target);
    } catch (const InputError& e) {
        throw IllDefined(e.what());
    }
}

}  // namespace latent
