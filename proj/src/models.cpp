#include "latent/models.hpp"

#include <algorithm>

namespace latent {

namespace {

// 0/1 labelings of the carrier that preserve bounds, meets and joins,
// as bit masks over the carrier, in ascending mask order.
std::vector<std::uint64_t> two_valued_maps(const Lattice& L) {
    const int n = L.size();
    if (n > 20) throw InputError("map enumeration is capped at 20 source elements");
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        auto at = [&](Elem x) { return (mask >> x) & 1ull; };
        if (at(L.bottom()) != 0 || at(L.top()) != 1) continue;
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x)
            for (Elem y = x; y < n && ok; ++y)
                ok = at(L.meet(x, y)) == (at(x) & at(y)) &&
                     at(L.join(x, y)) == (at(x) | at(y));
        if (ok) out.push_back(mask);
    }
    return out;
}

}  // namespace

std::vector<Hom> enumerate_homs(const Context& ctx) {
    const Lattice& L = ctx.L;
    const Lattice& BL = ctx.B.lattice();
    const auto twos = two_valued_maps(L);
    const size_t k = ctx.B.atoms().size();
    std::vector<Hom> out;
    if (twos.empty()) return out;
    std::vector<size_t> pick(k, 0);
    for (;;) {
        std::vector<Elem> table(L.size(), BL.bottom());
        for (size_t j = 0; j < k; ++j) {
            std::uint64_t mask = twos[pick[j]];
            Elem atom = ctx.B.atoms()[j];
            for (Elem x = 0; x < L.size(); ++x)
                if ((mask >> x) & 1ull) table[x] = BL.join(table[x], atom);
        }
        if (!hom_violation(table, L, BL, ctx.flavor))
            out.push_back(Hom{L, BL, std::move(table), ctx.flavor});
        // Odometer, last atom fastest.
        size_t j = k;
        while (j > 0) {
            if (++pick[j - 1] < twos.size()) break;
            pick[j - 1] = 0;
            --j;
        }
        if (j == 0) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Hom& a, const Hom& b) { return a.table < b.table; });
    return out;
}

StatementSet graph_of(const Hom& alpha) {
    std::vector<Statement> items;
    items.reserve(alpha.table.size());
    for (Elem x = 0; x < alpha.domain.size(); ++x) items.push_back({x, alpha(x)});
    return StatementSet(std::move(items));
}

SemanticResult semantic_entails(const Context& ctx, const Sequent& seq,
                                std::span<const Hom> homs) {
    ctx.require(seq);
    for (const Hom& alpha : homs) {
        bool covers = true;
        for (const Statement& s : seq.antecedent)
            if (alpha(s.x) != s.a) {
                covers = false;
                break;
            }
        if (!covers) continue;
        bool meets = false;
        for (const Statement& s : seq.succedent)
            if (alpha(s.x) == s.a) {
                meets = true;
                break;
            }
        if (!meets) return SemanticResult{false, alpha};
    }
    return SemanticResult{true, std::nullopt};
}

SemanticResult semantic_entails(const Context& ctx, const Sequent& seq) {
    return semantic_entails(ctx, seq, enumerate_homs(ctx));
}

Hom sikorski_extend(const Embedding& phi, const Hom& alpha, const BooleanAlgebra& B) {
    const Lattice& L = phi.hom.domain;
    const Lattice& Lp = phi.hom.codomain;
    if (!(alpha.domain == L))
        throw InputError("extension: the map and the embedding have different domains");
    if (!(alpha.codomain == B.lattice()))
        throw InputError("extension: the map does not land in the given algebra");
    Context ctx{Lp, B, Flavor::lattice};

    std::vector<Elem> value(Lp.size(), -1);
    std::vector<Statement> seed;
    for (Elem x = 0; x < L.size(); ++x) {
        value[phi(x)] = alpha(x);
        seed.push_back({phi(x), alpha(x)});
    }
    StatementSet X(std::move(seed));
    if (auto w = find_inconsistency(ctx, X))
        throw InvalidSeed("the image of the map is already inconsistent at atom '" +
                          B.lattice().name_of(w->atom) + "'");

    for (Elem y = 0; y < Lp.size(); ++y) {
        if (value[y] != -1) continue;
        for (Elem b = 0; b < B.size(); ++b) {
            if (find_inconsistency(ctx, X.with({y, b}))) continue;
            X = X.with({y, b});
            value[y] = b;
            break;
        }
        // With a boolean value algebra a consistent set always extends.
        if (value[y] == -1)
            throw InternalError("extension stuck at '" + Lp.name_of(y) + "'");
    }
    try {
        return check_hom(std::move(value), Lp, B.lattice());
    } catch (const InputError& e) {
        throw InternalError(std::string("extension produced a non-map: ") + e.what());
    }
}

std::optional<Elem> find_non_complemented(const Lattice& D) {
    for (Elem d = 0; d < D.size(); ++d) {
        bool has = false;
        for (Elem e = 0; e < D.size() && !has; ++e)
            has = D.meet(d, e) == D.bottom() && D.join(d, e) == D.top();
        if (!has) return d;
    }
    return std::nullopt;
}

std::optional<CounterexampleReport> conservativity_counterexample(const Lattice& D) {
    auto d0 = find_non_complemented(D);
    if (!d0) return std::nullopt;

    Lattice square = Lattice::from_pairs(
        "square", {"00", "01", "10", "11"},
        {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
    const Elem s00 = 0, s01 = 1, s11 = 3;

    CounterexampleReport report;
    report.d0 = *d0;
    report.seed = {{s00, D.bottom()}, {s01, *d0}, {s11, D.top()}};

    for (Elem d = 0; d < D.size(); ++d) {
        ValueRefutation r{d, std::nullopt, std::nullopt};
        if (D.meet(*d0, d) != D.bottom()) r.meet_clash = D.meet(*d0, d);
        if (D.join(*d0, d) != D.top()) r.join_clash = D.join(*d0, d);
        if (!r.meet_clash && !r.join_clash)
            throw InternalError("a value both meets to bottom and joins to top, so '" +
                                D.name_of(*d0) + "' is complemented after all");
        report.refutations.push_back(r);
    }

    auto [chain, inclusion] = sublattice_embedding(square, {s00, s01, s11});
    std::vector<Elem> table = {D.bottom(), *d0, D.top()};
    Hom sub_model = [&]() -> Hom {
        try {
            return check_hom(std::move(table), chain, D);
        } catch (const InputError& e) {
            throw InternalError(std::string("chain restriction is not a map: ") + e.what());
        }
    }();
    report.square = std::move(square);
    report.chain = std::move(chain);
    report.chain_inclusion = std::move(inclusion);
    report.sub_model = std::move(sub_model);
    return report;
}

}  // namespace latent
