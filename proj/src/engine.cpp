#include "nu/engine.hpp"

#include "nu/bounds.hpp"
#include "nu/catalog.hpp"
#include "nu/irreducible.hpp"
#include "nu/unipotent.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace nu {

BToC translate_b_to_c(const Weight& b, int p) {
    if (p != 2) throw Error("NotApplicable", "the B -> C translation needs characteristic 2");
    if (!is_restricted(b, 2)) throw Error("NotRestricted", weight_to_string(b) + " is not 2-restricted");
    const int l = static_cast<int>(b.size());
    BToC out;
    out.c_weight.assign(l, 0);
    Weight twisted(l, 0);
    for (int i = 0; i + 1 < l; ++i) {
        out.c_weight[i] = 2 * b[i];
        twisted[i] = b[i];
    }
    out.c_weight[l - 1] = b[l - 1];
    Weight spin(l, 0);
    spin[l - 1] = b[l - 1];
    bool has_twist = std::any_of(twisted.begin(), twisted.end(), [](int x) { return x != 0; });
    if (b[l - 1] && has_twist)
        out.recipe = "L_C(" + weight_to_string(spin) + ") (x) L_C(" + weight_to_string(twisted) + ")^[2]";
    else if (has_twist)
        out.recipe = "L_C(" + weight_to_string(twisted) + ")^[2]";
    else
        out.recipe = "L_C(" + weight_to_string(out.c_weight) + ")";
    return out;
}

NuResult compute_nu(const ModuleSpec& spec, const EngineConfig& config) {
    validate(spec.fr);
    if (static_cast<int>(spec.highest.size()) != spec.fr.rank)
        throw Error("InvalidWeight", "weight length does not match the rank");
    if (!is_dominant(spec.highest)) throw Error("NotDominant", weight_to_string(spec.highest));
    if (spec.p != 0 && !is_prime(spec.p)) throw Error("InvalidChar", std::to_string(spec.p) + " is not a prime");

    if (spec.fr.family == Family::B && spec.p == 2) {
        auto tr = translate_b_to_c(spec.highest, 2);
        NuResult r = compute_nu({{Family::C, spec.fr.rank}, tr.c_weight, 2}, config);
        r.spec = spec;
        r.via = "B->C isogeny: " + tr.recipe;
        return r;
    }

    auto known = Catalog::standard().lookup(spec);
    BigInt size = known ? *known : weyl_dim(spec.fr, spec.highest);
    if (size > config.max_dim)
        throw Error("TooLarge", "dimension " + size.str() + " exceeds the limit " + std::to_string(config.max_dim));

    auto irr = Irreducible::get(spec.fr, spec.highest, spec.p);
    NuResult r;
    r.spec = spec;
    r.dim_v = irr->dim();
    if (known && *known != r.dim_v)
        throw Error("Mismatch", "catalog dimension " + known->str() + " differs from the computed " +
                                    std::to_string(r.dim_v) + " for " + to_string(spec.fr) + " " +
                                    weight_to_string(spec.highest));

    auto s = max_eigenspace_on_character(spec, irr->character(), config.search);
    r.max_s = s.value;
    r.s_witness = s.witness.describe();
    r.s_eigen_exponent = s.eigen_exponent;
    r.s_root_order = 2 * s.witness.M;
    r.s_origin = s.origin;
    r.s_points = s.points;

    auto u = max_fixed_space_unipotent(spec);
    r.max_u = u.value;
    r.u_witness = to_string(u.witness);
    r.u_jordan = to_string(u.jordan);
    r.u_method = u.method;
    r.max_u_exact = u.exact;

    r.nu = r.dim_v - std::max(r.max_s, r.max_u);
    r.s_lambda = static_cast<long long>(s_lambda(spec));
    return r;
}

std::string to_json(const NuResult& r) {
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_letter(r.spec.fr.family));
    j["rank"] = r.spec.fr.rank;
    j["weight"] = r.spec.highest;
    j["char"] = r.spec.p;
    j["dim"] = r.dim_v;
    j["max_s"] = r.max_s;
    j["max_s_exact"] = r.max_s_exact;
    j["s_witness"] = r.s_witness;
    j["s_eigenvalue"] = "zeta_" + std::to_string(r.s_root_order) + "^" + std::to_string(r.s_eigen_exponent);
    j["s_origin"] = r.s_origin;
    j["s_points"] = r.s_points;
    j["max_u"] = r.max_u;
    j["max_u_exact"] = r.max_u_exact;
    j["u_witness"] = r.u_witness;
    j["u_jordan"] = r.u_jordan;
    j["u_method"] = r.u_method;
    j["nu"] = r.nu;
    j["s_lambda"] = r.s_lambda;
    if (!r.via.empty()) j["via"] = r.via;
    return j.dump();
}

std::string to_string(Relation r) {
    switch (r) {
    case Relation::Eq: return "=";
    case Relation::Le: return "<=";
    case Relation::Ge: return ">=";
    }
    return "?";
}

bool check_relation(Relation r, long long computed, long long expected) {
    switch (r) {
    case Relation::Eq: return computed == expected;
    case Relation::Le: return computed <= expected;
    case Relation::Ge: return computed >= expected;
    }
    return false;
}

namespace {

TableCell parse_cell(const std::string& text, const std::string& where) {
    std::string t = trim(text);
    TableCell c;
    size_t skip = 0;
    if (t.rfind("<=", 0) == 0) {
        c.rel = Relation::Le;
        skip = 2;
    } else if (t.rfind(">=", 0) == 0) {
        c.rel = Relation::Ge;
        skip = 2;
    } else if (t.rfind("=", 0) == 0) {
        skip = 1;
    } else {
        throw Error("ParseError", where + "cell '" + t + "' must start with =, <= or >=");
    }
    c.expr = Expr::parse(trim(t.substr(skip)));
    return c;
}

} // namespace

GoldenTables GoldenTables::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open table file " + path);
    GoldenTables g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto where = path + ":" + std::to_string(lineno) + ": ";
        if (t.rfind("let ", 0) == 0) {
            auto eq = t.find('=');
            if (eq == std::string::npos) throw Error("ParseError", where + "let without '='");
            std::istringstream head(t.substr(4, eq - 4));
            int table = 0;
            std::string name;
            if (!(head >> table >> name)) throw Error("ParseError", where + "expected 'let TABLE name = expr'");
            g.lets[table].emplace_back(name, Expr::parse(trim(t.substr(eq + 1))));
            continue;
        }
        auto parts = split_trim(t, '|');
        if (parts.size() != 4) throw Error("ParseError", where + "expected four '|'-separated fields");
        std::istringstream head(parts[0]);
        std::string table, fam, ranks, weight, cond;
        if (!(head >> table >> fam >> ranks >> weight >> cond)) throw Error("ParseError", where + "bad row head");
        TableRow row;
        row.table = std::stoi(table);
        row.family = parse_family(fam);
        row.ranks = RankRange::parse(ranks);
        row.weight = WeightPattern::parse(weight);
        row.cond = CharCondition::parse(cond);
        row.max_s = parse_cell(parts[1], where);
        row.max_u = parse_cell(parts[2], where);
        row.nu = parse_cell(parts[3], where);
        row.line = lineno;
        g.rows.push_back(std::move(row));
    }
    return g;
}

const GoldenTables& GoldenTables::standard() {
    static const GoldenTables g = load(data_dir() + "/tables.txt");
    return g;
}

Expr::Env GoldenTables::env(int table, int l, int p) const {
    auto e = lp_env(l, p);
    if (auto it = lets.find(table); it != lets.end())
        for (const auto& [name, expr] : it->second) e[name] = expr.eval_int(e);
    return e;
}

std::pair<int, int> default_rank_window(int table) {
    switch (table) {
    case 1: return {3, 8};
    case 2: return {2, 5};
    case 3: return {3, 5};
    case 4: return {4, 6};
    }
    return {1, 0};
}

std::string CellReport::label() const {
    std::ostringstream os;
    os << "T" << row->table << " " << family_letter(row->family) << l << " " << row->weight.text() << " p=" << p;
    return os.str();
}

std::vector<CellReport> verify_tables(const VerifyFilter& filter, const EngineConfig& config) {
    const auto& g = GoldenTables::standard();
    std::vector<CellReport> cells;
    for (const auto& row : g.rows) {
        if (!filter.tables.count(row.table)) continue;
        auto [lo, hi] = default_rank_window(row.table);
        if (filter.min_rank > 0) lo = filter.min_rank;
        if (filter.max_rank > 0) hi = filter.max_rank;
        for (int l = lo; l <= hi; ++l) {
            if (!row.ranks.contains(l)) continue;
            auto w = row.weight.at(l);
            if (!w) continue;
            try {
                validate({row.family, l});
            } catch (const Error&) {
                continue;
            }
            for (int p : filter.chars) {
                if (!row.cond.matches(p) || !is_restricted(*w, p)) continue;
                CellReport c;
                c.row = &row;
                c.l = l;
                c.p = p;
                cells.push_back(c);
            }
        }
    }

    auto run = [&](CellReport& c) {
        const auto& row = *c.row;
        try {
            auto env = g.env(row.table, c.l, c.p);
            const TableCell* cols[3] = {&row.max_s, &row.max_u, &row.nu};
            for (int k = 0; k < 3; ++k) c.expected[k] = static_cast<long long>(cols[k]->expr.eval_int(env));
            ModuleSpec spec{{row.family, c.l}, *row.weight.at(c.l), c.p};
            c.result = compute_nu(spec, config);
            long long got[3] = {c.result->max_s, c.result->max_u, c.result->nu};
            for (int k = 0; k < 3; ++k) c.ok[k] = check_relation(cols[k]->rel, got[k], c.expected[k]);
        } catch (const std::exception& e) {
            c.error = e.what();
        }
    };

    int threads = filter.threads > 0 ? filter.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(cells.size())));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (size_t k = next++; k < cells.size(); k = next++) run(cells[k]);
        });
    for (auto& th : pool) th.join();
    return cells;
}

} // namespace nu
