#include "nu/catalog.hpp"

#include "nu/irreducible.hpp"

#include <fstream>
#include <sstream>

namespace nu {

bool CatalogEntry::matches(const ModuleSpec& spec) const {
    if (spec.fr.family != family || !ranks.contains(spec.fr.rank) || !cond.matches(spec.p)) return false;
    // the tables only list p-restricted weights
    if (!is_restricted(spec.highest, spec.p)) return false;
    auto w = weight.at(spec.fr.rank);
    return w && *w == spec.highest;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open catalog " + path);
    Catalog cat;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto colon = t.find(':');
        if (colon == std::string::npos) throw Error("ParseError", path + ":" + std::to_string(lineno) + ": missing ':'");
        std::istringstream head(t.substr(0, colon));
        std::string fam, ranks, weight, cond, extra;
        if (!(head >> fam >> ranks >> weight >> cond) || (head >> extra))
            throw Error("ParseError", path + ":" + std::to_string(lineno) + ": expected FAMILY RANKS WEIGHT CHAR");
        try {
            cat.entries_.push_back({parse_family(fam), RankRange::parse(ranks), WeightPattern::parse(weight),
                                    CharCondition::parse(cond), Expr::parse(trim(t.substr(colon + 1))), lineno});
        } catch (const Error& e) {
            throw Error("ParseError", path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cat;
}

const Catalog& Catalog::standard() {
    static const Catalog cat = load(data_dir() + "/catalog.txt");
    return cat;
}

const CatalogEntry* Catalog::find(const ModuleSpec& spec) const {
    for (const auto& e : entries_)
        if (e.matches(spec)) return &e;
    return nullptr;
}

std::optional<BigInt> Catalog::lookup(const ModuleSpec& spec) const {
    const CatalogEntry* e = find(spec);
    if (!e) return std::nullopt;
    return e->dim.eval_int(lp_env(spec.fr.rank, spec.p));
}

BigInt irreducible_dim(const ModuleSpec& spec) {
    if (auto v = Catalog::standard().lookup(spec)) return *v;
    auto rs = RootSystem::build(spec.fr);
    if (!is_dominant(spec.highest)) throw Error("NotDominant", weight_to_string(spec.highest));
    if (spec.p == 0 || (is_restricted(spec.highest, spec.p) && weyl_module_is_simple(rs, spec.highest, spec.p)))
        return weyl_dim(rs, spec.highest);
    throw Error("UnknownModularDim", to_string(spec.fr) + " " + weight_to_string(spec.highest) + " p=" +
                                         std::to_string(spec.p));
}

BigInt modular_dim(const ModuleSpec& spec) {
    try {
        return irreducible_dim(spec);
    } catch (const Error& e) {
        if (e.kind() != "UnknownModularDim") throw;
    }
    return Irreducible::get(spec.fr, spec.highest, spec.p)->dim();
}

} // namespace nu
