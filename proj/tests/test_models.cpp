#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latent/models.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace latent;
namespace tst = latent::testing;

namespace {

Context ctx_of(Lattice L, int atoms, Flavor flavor = Flavor::lattice) {
    return Context{std::move(L), BooleanAlgebra::powerset(atoms), flavor};
}

StatementSet random_set(std::mt19937& rng, const Context& ctx, int max_size) {
    std::uniform_int_distribution<int> size(0, max_size);
    std::uniform_int_distribution<Elem> xs(0, ctx.L.size() - 1);
    std::uniform_int_distribution<Elem> as(0, ctx.B.size() - 1);
    std::vector<Statement> items;
    for (int i = size(rng); i > 0; --i) items.push_back({xs(rng), as(rng)});
    return StatementSet(std::move(items));
}

}  // namespace

TEST_CASE("two-valued model counts on small sources") {
    CHECK(enumerate_homs(ctx_of(tst::c3(), 1)).size() == 2);
    CHECK(enumerate_homs(ctx_of(tst::sq(), 1)).size() == 2);
    CHECK(enumerate_homs(ctx_of(tst::lam(), 1)).size() == 3);
    CHECK(enumerate_homs(ctx_of(tst::vee(), 1)).size() == 3);
    CHECK(enumerate_homs(ctx_of(tst::b8(), 1)).size() == 3);
    CHECK(enumerate_homs(ctx_of(tst::one(), 1)).empty());

    auto sq_homs = enumerate_homs(ctx_of(tst::sq(), 1));
    CHECK(sq_homs[0].table == std::vector<Elem>{0, 0, 1, 1});
    CHECK(sq_homs[1].table == std::vector<Elem>{0, 1, 0, 1});
}

TEST_CASE("heyting flavor thins the model list") {
    auto hey = enumerate_homs(ctx_of(tst::c3(), 1, Flavor::heyting));
    REQUIRE(hey.size() == 1);
    CHECK(hey[0].table == std::vector<Elem>{0, 1, 1});
    CHECK(enumerate_homs(ctx_of(tst::lam(), 1, Flavor::heyting)).size() == 2);
    CHECK(enumerate_homs(ctx_of(tst::c3(), 2, Flavor::heyting)).size() == 1);
}

TEST_CASE("models into larger algebras assemble atomwise") {
    CHECK(enumerate_homs(ctx_of(tst::c3(), 2)).size() == 4);
    CHECK(enumerate_homs(ctx_of(tst::sq(), 2)).size() == 4);
    CHECK(enumerate_homs(ctx_of(tst::c3(), 3)).size() == 8);
}

TEST_CASE("enumeration agrees with the brute-force map scan") {
    for (const Lattice& L : tst::catalog()) {
        if (L.size() > 5) continue;
        for (int atoms : {1, 2}) {
            for (Flavor flavor : {Flavor::lattice, Flavor::heyting}) {
                Context ctx = ctx_of(L, atoms, flavor);
                CAPTURE(L.name());
                CAPTURE(atoms);
                auto fast = enumerate_homs(ctx);
                auto slow = tst::all_maps_oracle(ctx.L, ctx.B.lattice(), flavor);
                REQUIRE(fast.size() == slow.size());
                for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].table == slow[i]);
            }
        }
    }
}

TEST_CASE("model graphs are consistent and respect entailment") {
    std::mt19937 rng(23);
    for (Flavor flavor : {Flavor::lattice, Flavor::heyting}) {
        Context ctx = ctx_of(tst::lam(), 2, flavor);
        auto homs = enumerate_homs(ctx);
        for (const Hom& h : homs) CHECK_FALSE(find_inconsistency(ctx, graph_of(h)).has_value());
        for (int i = 0; i < 200; ++i) {
            Sequent seq{random_set(rng, ctx, 3), random_set(rng, ctx, 2)};
            if (!entails(ctx, seq).entailed) continue;
            for (const Hom& h : homs) {
                StatementSet g = graph_of(h);
                bool covers = true;
                for (const Statement& s : seq.antecedent)
                    if (!g.contains(s)) covers = false;
                if (covers) CHECK(g.intersects(seq.succedent));
            }
        }
    }
}

TEST_CASE("syntactic and semantic decisions coincide") {
    std::mt19937 rng(29);
    std::vector<Context> ctxs;
    ctxs.push_back(ctx_of(tst::c3(), 1));
    ctxs.push_back(ctx_of(tst::c3(), 1, Flavor::heyting));
    ctxs.push_back(ctx_of(tst::sq(), 2));
    ctxs.push_back(ctx_of(tst::lam(), 1, Flavor::heyting));
    ctxs.push_back(ctx_of(tst::vee(), 2));
    for (const Context& ctx : ctxs) {
        auto homs = enumerate_homs(ctx);
        for (int i = 0; i < 400; ++i) {
            Sequent seq{random_set(rng, ctx, 3), random_set(rng, ctx, 2)};
            auto syn = entails(ctx, seq);
            auto sem = semantic_entails(ctx, seq, homs);
            CHECK(syn.entailed == sem.entailed);
            if (!sem.entailed) {
                REQUIRE(sem.countermodel.has_value());
                StatementSet g = graph_of(*sem.countermodel);
                for (const Statement& s : seq.antecedent) CHECK(g.contains(s));
                CHECK_FALSE(g.intersects(seq.succedent));
            }
        }
    }
}

TEST_CASE("the countermodel is the first in canonical order") {
    Context ctx = ctx_of(tst::sq(), 1);
    Elem a = ctx.L.index_of("a");
    auto res = semantic_entails(ctx, {StatementSet{}, StatementSet{{a, 1}}});
    REQUIRE_FALSE(res.entailed);
    // Both models dodge (a, e1)? No: only the one sending a to 0.
    CHECK(res.countermodel->table == std::vector<Elem>{0, 0, 1, 1});

    auto res2 = semantic_entails(ctx, {StatementSet{}, StatementSet{{a, 0}}});
    CHECK(res2.countermodel->table == std::vector<Elem>{0, 1, 0, 1});
}

TEST_CASE("extension along the bounds of the square") {
    Lattice c2 = tst::c2();
    Lattice sq = tst::sq();
    BooleanAlgebra b2 = BooleanAlgebra::powerset(1);
    auto [sub, phi] = sublattice_embedding(sq, {sq.index_of("0"), sq.index_of("1")});
    CHECK(sub == c2);
    Hom alpha = check_hom({0, 1}, sub, b2.lattice());
    Hom beta = sikorski_extend(phi, alpha, b2);
    CHECK(beta.table == std::vector<Elem>{0, 0, 1, 1});
}

TEST_CASE("extension from a maximal chain in the square") {
    Lattice sq = tst::sq();
    BooleanAlgebra b2 = BooleanAlgebra::powerset(1);
    auto [sub, phi] =
        sublattice_embedding(sq, {sq.index_of("0"), sq.index_of("a"), sq.index_of("1")});
    Elem b = sq.index_of("b");

    Hom up = check_hom({0, 1, 1}, sub, b2.lattice());
    CHECK(sikorski_extend(phi, up, b2).table[b] == 0);

    Hom low = check_hom({0, 0, 1}, sub, b2.lattice());
    CHECK(sikorski_extend(phi, low, b2).table[b] == 1);
}

TEST_CASE("every partial map on a sublattice extends to a total one") {
    for (const Lattice& L : tst::catalog()) {
        CAPTURE(L.name());
        for (const auto& subset : tst::all_sublattices(L)) {
            auto [sub, phi] = sublattice_embedding(L, subset);
            for (int atoms : {1, 2}) {
                BooleanAlgebra B = BooleanAlgebra::powerset(atoms);
                Context sub_ctx{sub, B, Flavor::lattice};
                for (const Hom& alpha : enumerate_homs(sub_ctx)) {
                    Hom beta = sikorski_extend(phi, alpha, B);
                    CHECK(beta.domain.size() == L.size());
                    CHECK(tst::obeys_laws(beta.table, L, B.lattice(), Flavor::lattice));
                    for (Elem x = 0; x < sub.size(); ++x)
                        CHECK(beta.table[phi.hom.table[x]] == alpha.table[x]);
                }
            }
        }
    }
}

TEST_CASE("extension is deterministic") {
    Lattice b8 = tst::b8();
    BooleanAlgebra b2 = BooleanAlgebra::powerset(1);
    auto [sub, phi] = sublattice_embedding(b8, {b8.bottom(), b8.index_of("e1"), b8.top()});
    Hom alpha = check_hom({0, 1, 1}, sub, b2.lattice());
    Hom first = sikorski_extend(phi, alpha, b2);
    Hom second = sikorski_extend(phi, alpha, b2);
    CHECK(first.table == second.table);
}

TEST_CASE("extension rejects mismatched pieces") {
    Lattice sq = tst::sq();
    BooleanAlgebra b2 = BooleanAlgebra::powerset(1);
    auto [sub, phi] = sublattice_embedding(sq, {sq.bottom(), sq.top()});
    Hom wrong_domain = check_hom({0, 1, 2}, tst::c3(), tst::c3());
    CHECK_THROWS_AS(sikorski_extend(phi, wrong_domain, b2), InputError);
    Hom wrong_codomain = check_hom({0, 3}, sub, BooleanAlgebra::powerset(2).lattice());
    CHECK_THROWS_AS(sikorski_extend(phi, wrong_codomain, b2), InputError);
}

TEST_CASE("complement gaps are found in canonical order") {
    CHECK_FALSE(find_non_complemented(tst::c2()).has_value());
    CHECK_FALSE(find_non_complemented(tst::sq()).has_value());
    CHECK_FALSE(find_non_complemented(tst::b8()).has_value());
    CHECK_FALSE(find_non_complemented(tst::one()).has_value());

    Lattice c3 = tst::c3();
    CHECK(find_non_complemented(c3) == c3.index_of("m"));
    Lattice lam = tst::lam();
    CHECK(find_non_complemented(lam) == lam.index_of("u"));
    Lattice vee = tst::vee();
    CHECK(find_non_complemented(vee) == vee.index_of("m"));
}

TEST_CASE("a non-complemented value wrecks extension from the chain") {
    Lattice c3 = tst::c3();
    auto report = conservativity_counterexample(c3);
    REQUIRE(report.has_value());
    Elem m = c3.index_of("m");
    CHECK(report->d0 == m);

    CHECK(report->square.size() == 4);
    CHECK(report->square.element_names() ==
          std::vector<std::string>{"00", "01", "10", "11"});
    Elem s00 = report->square.index_of("00");
    Elem s01 = report->square.index_of("01");
    Elem s10 = report->square.index_of("10");
    Elem s11 = report->square.index_of("11");
    CHECK(report->square.meet(s01, s10) == s00);
    CHECK(report->square.join(s01, s10) == s11);

    REQUIRE(report->seed.size() == 3);
    CHECK(report->seed[0] == Statement{s00, c3.bottom()});
    CHECK(report->seed[1] == Statement{s01, m});
    CHECK(report->seed[2] == Statement{s11, c3.top()});

    REQUIRE(report->refutations.size() == 3);
    // d = 0: the join with d0 stays below top.
    CHECK(report->refutations[0].d == c3.bottom());
    CHECK_FALSE(report->refutations[0].meet_clash.has_value());
    CHECK(report->refutations[0].join_clash == m);
    // d = m: both laws break.
    CHECK(report->refutations[1].d == m);
    CHECK(report->refutations[1].meet_clash == m);
    CHECK(report->refutations[1].join_clash == m);
    // d = 1: the meet with d0 stays above bottom.
    CHECK(report->refutations[2].d == c3.top());
    CHECK(report->refutations[2].meet_clash == m);
    CHECK_FALSE(report->refutations[2].join_clash.has_value());

    CHECK(report->chain.size() == 3);
    CHECK(report->chain_inclusion.hom.table == std::vector<Elem>{s00, s01, s11});
    CHECK(report->sub_model.table == std::vector<Elem>{c3.bottom(), m, c3.top()});
    CHECK(tst::obeys_laws(report->sub_model.table, report->chain, c3, Flavor::lattice));
}

TEST_CASE("complemented value lattices yield no counterexample") {
    CHECK_FALSE(conservativity_counterexample(tst::b8()).has_value());
    CHECK_FALSE(conservativity_counterexample(tst::sq()).has_value());
    CHECK_FALSE(conservativity_counterexample(tst::c2()).has_value());
}

TEST_CASE("refutation tables are faithful for every non-complemented catalog lattice") {
    for (const Lattice& D : tst::catalog()) {
        auto report = conservativity_counterexample(D);
        auto gap = find_non_complemented(D);
        CHECK(report.has_value() == gap.has_value());
        if (!report) continue;
        CAPTURE(D.name());
        CHECK(report->d0 == *gap);
        REQUIRE(report->refutations.size() == static_cast<size_t>(D.size()));
        for (Elem d = 0; d < D.size(); ++d) {
            const ValueRefutation& r = report->refutations[d];
            CHECK(r.d == d);
            Elem mt = D.meet(report->d0, d);
            Elem jn = D.join(report->d0, d);
            CHECK(r.meet_clash == (mt != D.bottom() ? std::optional<Elem>(mt) : std::nullopt));
            CHECK(r.join_clash == (jn != D.top() ? std::optional<Elem>(jn) : std::nullopt));
            CHECK((r.meet_clash.has_value() || r.join_clash.has_value()));
        }
        // The chain map survives: restricting the seed loses nothing.
        for (Elem x = 0; x < report->chain.size(); ++x) {
            Elem in_square = report->chain_inclusion.hom.table[x];
            bool seeded = false;
            for (const Statement& s : report->seed)
                if (s.x == in_square && s.a == report->sub_model.table[x]) seeded = true;
            CHECK(seeded);
        }
    }
}
