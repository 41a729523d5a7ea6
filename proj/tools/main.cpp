#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latent/generated.hpp"
#include "latent/io.hpp"
#include "latent/models.hpp"

using namespace latent;
using nlohmann::json;

namespace {

std::string hom_line(const Hom& h) {
    std::string out;
    for (Elem x = 0; x < h.domain.size(); ++x) {
        if (x) out += ' ';
        out += h.domain.name_of(x) + "->" + h.codomain.name_of(h(x));
    }
    return out;
}

json name_list(const Lattice& L, const std::vector<Elem>& elems) {
    json arr = json::array();
    for (Elem e : elems) arr.push_back(L.name_of(e));
    return arr;
}

void emit(const json& payload) { std::cout << payload.dump() << "\n"; }

Flavor flavor_of(const std::string& name) {
    return name == "heyting" ? Flavor::heyting : Flavor::lattice;
}

int run_validate(const std::string& lattice_file) {
    Lattice L = load_lattice(lattice_file);
    json payload;
    payload["name"] = L.name();
    payload["elements"] = name_list(L, [&] {
        std::vector<Elem> all(L.size());
        for (Elem x = 0; x < L.size(); ++x) all[x] = x;
        return all;
    }());
    payload["bottom"] = L.name_of(L.bottom());
    payload["top"] = L.name_of(L.top());
    payload["irreducible"] = name_list(L, L.irreducibles());
    payload["complemented"] = !find_non_complemented(L).has_value();
    emit(payload);
    return 0;
}

int run_entails(const std::string& lattice_file, const std::string& algebra_spec,
                const std::string& sequent_file, const std::string& flavor_name,
                bool witness, bool countermodel, int max_succedent) {
    Context ctx{load_lattice(lattice_file), parse_algebra_spec(algebra_spec),
                flavor_of(flavor_name)};
    Sequent seq = load_sequent(sequent_file, ctx);
    if (witness && seq.succedent.size() > static_cast<size_t>(max_succedent))
        throw InputError("succedent too large for witness enumeration (cap " +
                         std::to_string(max_succedent) + ")");
    EntailsResult res = entails(ctx, seq);
    json payload;
    payload["lattice"] = ctx.L.name();
    payload["algebra"] = algebra_spec;
    payload["flavor"] = flavor_name;
    payload["entailed"] = res.entailed;
    if (!res.entailed)
        payload["tuple"] = name_list(ctx.B.lattice(), *res.failing_tuple);
    emit(payload);
    if (res.entailed && witness) {
        for (const TupleWitness& w : entails_witnesses(ctx, seq)) {
            std::string vals;
            for (size_t i = 0; i < w.values.size(); ++i) {
                if (i) vals += ',';
                vals += ctx.B.lattice().name_of(w.values[i]);
            }
            std::cout << "tuple=" << vals << " atom=" << ctx.B.lattice().name_of(w.witness.atom)
                      << " lhs=" << ctx.L.name_of(w.witness.lhs)
                      << " rhs=" << ctx.L.name_of(w.witness.rhs) << "\n";
        }
    }
    if (!res.entailed && countermodel) {
        SemanticResult sem = semantic_entails(ctx, seq);
        if (sem.countermodel) std::cout << hom_line(*sem.countermodel) << "\n";
    }
    return res.entailed ? 0 : 1;
}

int run_models(const std::string& lattice_file, const std::string& algebra_spec,
               const std::string& flavor_name, bool list) {
    Context ctx{load_lattice(lattice_file), parse_algebra_spec(algebra_spec),
                flavor_of(flavor_name)};
    auto homs = enumerate_homs(ctx);
    json payload;
    payload["lattice"] = ctx.L.name();
    payload["algebra"] = algebra_spec;
    payload["flavor"] = flavor_name;
    payload["count"] = homs.size();
    emit(payload);
    if (list)
        for (const Hom& h : homs) std::cout << hom_line(h) << "\n";
    return 0;
}

int run_extend(const std::string& sub_file, const std::string& super_file,
               const std::string& embedding_file, const std::string& hom_file,
               const std::string& algebra_spec) {
    Lattice sub = load_lattice(sub_file);
    Lattice super = load_lattice(super_file);
    BooleanAlgebra B = parse_algebra_spec(algebra_spec);
    Embedding phi = check_embedding(check_hom(load_map(embedding_file, sub, super), sub, super));
    Hom alpha = check_hom(load_map(hom_file, sub, B.lattice()), sub, B.lattice());
    Hom beta = sikorski_extend(phi, alpha, B);
    json payload;
    payload["sub"] = sub.name();
    payload["super"] = super.name();
    payload["algebra"] = algebra_spec;
    payload["assigned"] = super.size() - sub.size();
    emit(payload);
    std::cout << hom_line(beta) << "\n";
    return 0;
}

int run_booleanize(const std::string& lattice_file) {
    Lattice L = load_lattice(lattice_file);
    Booleanization bz = booleanize(L);
    json payload;
    payload["lattice"] = L.name();
    const Lattice& C = bz.algebra.lattice();
    payload["carrier"] = name_list(C, [&] {
        std::vector<Elem> all(C.size());
        for (Elem x = 0; x < C.size(); ++x) all[x] = x;
        return all;
    }());
    payload["atoms"] = name_list(C, bz.algebra.atoms());
    emit(payload);
    std::cout << hom_line(bz.map) << "\n";
    return 0;
}

int run_generate(const std::string& lattice_file, int max_classes) {
    Lattice L = load_lattice(lattice_file);
    GeneratedAlgebra G = generate_boolean_algebra(L, max_classes);
    json payload;
    payload["lattice"] = L.name();
    payload["classes"] = G.carrier.size();
    payload["atoms"] = G.carrier.atoms().size();
    emit(payload);
    const Lattice& C = G.carrier.lattice();
    for (Elem a = 0; a < 2; ++a) {
        std::string line = "unit" + std::to_string(a) + ":";
        for (Elem x = 0; x < L.size(); ++x)
            line += " " + L.name_of(x) + "->" + C.name_of(G.unit_of(x, a));
        std::cout << line << "\n";
    }
    return 0;
}

int run_counterexample(const std::string& lattice_file) {
    Lattice D = load_lattice(lattice_file);
    auto report = conservativity_counterexample(D);
    json payload;
    payload["lattice"] = D.name();
    payload["complemented"] = !report.has_value();
    if (!report) {
        emit(payload);
        return 1;
    }
    payload["d0"] = D.name_of(report->d0);
    json seed = json::array();
    for (const Statement& s : report->seed)
        seed.push_back({report->square.name_of(s.x), D.name_of(s.a)});
    payload["seed"] = seed;
    emit(payload);
    for (const ValueRefutation& r : report->refutations) {
        std::string line = "d=" + D.name_of(r.d);
        if (r.meet_clash) line += " meet=" + D.name_of(*r.meet_clash);
        if (r.join_clash) line += " join=" + D.name_of(*r.join_clash);
        std::cout << line << "\n";
    }
    std::cout << "chain: " << hom_line(report->sub_model) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entailment relations for maps from a finite distributive lattice into a boolean algebra"};
    app.require_subcommand(1);

    std::string lattice_file, algebra_spec = "powerset:1", sequent_file;
    std::string flavor_name = "lattice";
    std::string sub_file, super_file, embedding_file, hom_file;
    bool witness = false, countermodel = false, list = false;
    int max_succedent = 6, max_classes = 4096;

    auto flavor_opt = [&](CLI::App* cmd) {
        cmd->add_option("--flavor", flavor_name, "lattice or heyting")
            ->check(CLI::IsMember({"lattice", "heyting"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "load a lattice document and describe it");
    validate->add_option("--lattice", lattice_file, "lattice document")->required();

    CLI::App* entails_cmd = app.add_subcommand("entails", "decide a sequent of statements");
    entails_cmd->add_option("--lattice", lattice_file, "lattice document")->required();
    entails_cmd->add_option("--algebra", algebra_spec, "value algebra, powerset:N");
    entails_cmd->add_option("--sequent", sequent_file, "sequent document")->required();
    flavor_opt(entails_cmd);
    entails_cmd->add_flag("--witness", witness, "print one certificate per shifted-value tuple");
    entails_cmd->add_flag("--countermodel", countermodel, "print a refuting map when not entailed");
    entails_cmd->add_option("--max-succedent", max_succedent,
                            "cap on the succedent size for witness enumeration");

    CLI::App* models = app.add_subcommand("models", "enumerate maps into the value algebra");
    models->add_option("--lattice", lattice_file, "lattice document")->required();
    models->add_option("--algebra", algebra_spec, "value algebra, powerset:N");
    flavor_opt(models);
    models->add_flag("--list", list, "print one line per map");

    CLI::App* extend = app.add_subcommand(
        "extend", "extend a map on a sublattice to the whole lattice");
    extend->add_option("--sub", sub_file, "sublattice document")->required();
    extend->add_option("--super", super_file, "ambient lattice document")->required();
    extend->add_option("--embedding", embedding_file, "map document for the inclusion")->required();
    extend->add_option("--hom", hom_file, "map document into the value algebra")->required();
    extend->add_option("--algebra", algebra_spec, "value algebra, powerset:N");

    CLI::App* boolz = app.add_subcommand(
        "booleanize", "the boolean algebra of complemented-by-negation elements");
    boolz->add_option("--lattice", lattice_file, "lattice document")->required();

    CLI::App* generate = app.add_subcommand(
        "generate", "the boolean algebra generated by the statements over two values");
    generate->add_option("--lattice", lattice_file, "lattice document")->required();
    generate->add_option("--max-classes", max_classes, "cap on discovered classes");

    CLI::App* counter = app.add_subcommand(
        "counterexample", "why non-boolean values break extension from a sublattice");
    counter->add_option("--lattice", lattice_file, "value lattice document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return run_validate(lattice_file);
        if (entails_cmd->parsed())
            return run_entails(lattice_file, algebra_spec, sequent_file, flavor_name, witness,
                               countermodel, max_succedent);
        if (models->parsed()) return run_models(lattice_file, algebra_spec, flavor_name, list);
        if (extend->parsed())
            return run_extend(sub_file, super_file, embedding_file, hom_file, algebra_spec);
        if (boolz->parsed()) return run_booleanize(lattice_file);
        if (generate->parsed()) return run_generate(lattice_file, max_classes);
        if (counter->parsed()) return run_counterexample(lattice_file);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
