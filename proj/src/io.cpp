#include "latent/io.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>

namespace latent {

namespace {

using nlohmann::json;

json load_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string(), "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(file.string(), e.what());
    }
}

const json& field(const std::filesystem::path& file, const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw ParseError(file.string(), std::string("missing field '") + key + "'");
    return doc[key];
}

std::string as_string(const std::filesystem::path& file, const json& v, const char* what) {
    if (!v.is_string())
        throw ParseError(file.string(), std::string(what) + " must be a string");
    return v.get<std::string>();
}

Elem resolve(const Lattice& carrier, const std::string& name) {
    if (auto i = carrier.find(name)) return *i;
    throw ForeignElement(name);
}

}  // namespace

Lattice load_lattice(const std::filesystem::path& file) {
    json doc = load_json(file);
    std::string name = as_string(file, field(file, doc, "name"), "name");
    const json& elems = field(file, doc, "elements");
    if (!elems.is_array()) throw ParseError(file.string(), "elements must be an array");
    std::vector<std::string> elements;
    for (const json& e : elems) elements.push_back(as_string(file, e, "element"));
    const json& leq = field(file, doc, "leq");
    if (!leq.is_array()) throw ParseError(file.string(), "leq must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const json& p : leq) {
        if (!p.is_array() || p.size() != 2)
            throw ParseError(file.string(), "leq entries must be pairs");
        pairs.emplace_back(as_string(file, p[0], "leq entry"), as_string(file, p[1], "leq entry"));
    }
    return Lattice::from_pairs(std::move(name), std::move(elements), pairs);
}

std::vector<Elem> load_map(const std::filesystem::path& file, const Lattice& domain,
                           const Lattice& codomain) {
    json doc = load_json(file);
    const json& map = field(file, doc, "map");
    if (!map.is_object()) throw ParseError(file.string(), "map must be an object");
    std::vector<Elem> table(domain.size(), -1);
    for (const auto& [key, value] : map.items()) {
        Elem x = resolve(domain, key);
        table[x] = resolve(codomain, as_string(file, value, "map value"));
    }
    for (Elem x = 0; x < domain.size(); ++x)
        if (table[x] == -1)
            throw ParseError(file.string(), "map misses element '" + domain.name_of(x) + "'");
    return table;
}

Sequent load_sequent(const std::filesystem::path& file, const Context& ctx) {
    json doc = load_json(file);
    auto side = [&](const char* key) {
        const json& arr = field(file, doc, key);
        if (!arr.is_array())
            throw ParseError(file.string(), std::string(key) + " must be an array of pairs");
        std::vector<Statement> out;
        for (const json& p : arr) {
            if (!p.is_array() || p.size() != 2)
                throw ParseError(file.string(), std::string(key) + " entries must be pairs");
            Elem x = resolve(ctx.L, as_string(file, p[0], "statement element"));
            Elem a = resolve(ctx.B.lattice(), as_string(file, p[1], "statement value"));
            out.push_back({x, a});
        }
        return StatementSet(std::move(out));
    };
    return Sequent{side("antecedent"), side("succedent")};
}

BooleanAlgebra parse_algebra_spec(std::string_view spec) {
    constexpr std::string_view prefix = "powerset:";
    if (spec.substr(0, prefix.size()) == prefix) {
        int n = 0;
        const char* first = spec.data() + prefix.size();
        const char* last = spec.data() + spec.size();
        auto [ptr, ec] = std::from_chars(first, last, n);
        if (ec == std::errc() && ptr == last && n >= 1) return BooleanAlgebra::powerset(n);
    }
    throw InputError("bad algebra spec '" + std::string(spec) + "': expected powerset:N");
}

}  // namespace latent
