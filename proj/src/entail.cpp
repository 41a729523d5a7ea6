#include "latent/entail.hpp"

namespace latent {

std::optional<InconsistencyWitness> find_inconsistency(const Context& ctx,
                                                       const StatementSet& X) {
    ctx.require(X);
    const Lattice& L = ctx.L;
    const Lattice& BL = ctx.B.lattice();
    const bool heyting = ctx.flavor == Flavor::heyting;
    for (Elem e : ctx.B.atoms()) {
        Elem lhs = L.top();
        Elem rhs = L.bottom();
        for (const Statement& s : X) {
            Elem x = heyting ? L.regularize(s.x) : s.x;
            if (BL.leq(e, s.a))
                lhs = L.meet(lhs, x);
            else if (BL.leq(e, ctx.B.complement(s.a)))
                rhs = L.join(rhs, x);
            else
                throw InternalError("atom dichotomy fails in the value algebra");
        }
        if (heyting) rhs = L.regularize(rhs);
        if (L.leq(lhs, rhs)) return InconsistencyWitness{e, lhs, rhs};
    }
    return std::nullopt;
}

namespace {

// Depth-first scan over shifted-value tuples with prefix pruning.
bool all_shifts_inconsistent(const Context& ctx, const StatementSet& acc,
                             std::span<const Statement> succedent, size_t i,
                             std::vector<Elem>& chosen,
                             std::optional<std::vector<Elem>>& failing) {
    if (find_inconsistency(ctx, acc)) return true;
    if (i == succedent.size()) {
        failing = chosen;
        return false;
    }
    const Statement& s = succedent[i];
    for (Elem b = 0; b < ctx.B.size(); ++b) {
        if (b == s.a) continue;
        chosen[i] = b;
        if (!all_shifts_inconsistent(ctx, acc.with({s.x, b}), succedent, i + 1, chosen, failing))
            return false;
    }
    return true;
}

}  // namespace

EntailsResult entails(const Context& ctx, const Sequent& seq) {
    ctx.require(seq);
    auto succedent = seq.succedent.items();
    std::vector<Elem> chosen(succedent.size());
    std::optional<std::vector<Elem>> failing;
    bool ok = all_shifts_inconsistent(ctx, seq.antecedent, succedent, 0, chosen, failing);
    return EntailsResult{ok, std::move(failing)};
}

std::vector<TupleWitness> entails_witnesses(const Context& ctx, const Sequent& seq) {
    ctx.require(seq);
    auto succedent = seq.succedent.items();
    const size_t k = succedent.size();
    std::vector<TupleWitness> out;
    std::vector<Elem> tuple(k);
    // Odometer over shifted values, first position slowest.
    auto emit = [&](auto&& self, const StatementSet& acc, size_t i) -> void {
        if (i == k) {
            auto w = find_inconsistency(ctx, acc);
            if (!w)
                throw InternalError("witness enumeration reached a consistent tuple");
            out.push_back(TupleWitness{tuple, *w});
            return;
        }
        for (Elem b = 0; b < ctx.B.size(); ++b) {
            if (b == succedent[i].a) continue;
            tuple[i] = b;
            self(self, acc.with({succedent[i].x, b}), i + 1);
        }
    };
    emit(emit, seq.antecedent, 0);
    return out;
}

StatementSet interpret(const Hom& phi, const StatementSet& X) {
    std::vector<Statement> out;
    out.reserve(X.items().size());
    for (const Statement& s : X) {
        if (s.x < 0 || s.x >= phi.domain.size())
            throw ForeignElement("#" + std::to_string(s.x));
        out.push_back({phi(s.x), s.a});
    }
    return StatementSet(std::move(out));
}

Sequent interpret(const Hom& phi, const Sequent& seq) {
    return Sequent{interpret(phi, seq.antecedent), interpret(phi, seq.succedent)};
}

}  // namespace latent
