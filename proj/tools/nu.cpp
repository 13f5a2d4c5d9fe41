#include "nu/bounds.hpp"
#include "nu/engine.hpp"
#include "nu/oracle.hpp"
#include "nu/pattern.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

using namespace nu;

namespace {

struct SpecArgs {
    std::string family;
    int rank = 0;
    std::string weight;
    int p = 0;

    void add(CLI::App* cmd) {
        cmd->add_option("--family", family, "A, B, C or D")->required();
        cmd->add_option("--rank", rank, "rank l")->required();
        cmd->add_option("--weight", weight, "fundamental coordinates, e.g. 0,0,1")->required();
        cmd->add_option("--char", p, "characteristic (0 or a prime)");
    }
    ModuleSpec spec() const { return {{parse_family(family), rank}, parse_weight(weight), p}; }
};

void add_search_flags(CLI::App* cmd, EngineConfig& cfg) {
    cmd->add_option("--root-of-unity-order", cfg.search.max_order,
                    "sweep homomorphisms to Z/r for primes r up to this bound (default 2l+4)");
    cmd->add_option("--max-block-shapes", cfg.search.max_points, "cap on sweep points per prime (0: no cap)");
    cmd->add_flag("--witness-catalog-only", cfg.search.witness_catalog_only, "skip the sweep, use witnesses only");
    cmd->add_option("--max-dim", cfg.max_dim, "refuse modules above this dimension");
}

int cmd_compute(const SpecArgs& a, const EngineConfig& cfg, bool json) {
    NuResult r = compute_nu(a.spec(), cfg);
    if (json) {
        std::cout << to_json(r) << "\n";
        return 0;
    }
    std::cout << to_string(r.spec.fr) << " L(" << weight_to_string(r.spec.highest) << ") p=" << r.spec.p << "\n"
              << "  dim     " << r.dim_v << "\n"
              << "  max_s   " << r.max_s << "   s = " << r.s_witness << ", eigenvalue zeta_" << r.s_root_order << "^"
              << r.s_eigen_exponent << " (" << r.s_origin << ")\n"
              << "  max_u   " << r.max_u << "   u = " << r.u_witness << ", Jordan type " << r.u_jordan << " ("
              << r.u_method << ")\n"
              << "  nu      " << r.nu << (r.max_s_exact ? "" : "   (upper bound: max_s from a bounded sweep)") << "\n"
              << "  s_lambda " << r.s_lambda << "\n";
    if (!r.via.empty()) std::cout << "  via     " << r.via << "\n";
    return 0;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int cmd_verify(VerifyFilter f, const std::vector<int>& tables, const EngineConfig& cfg) {
    if (!tables.empty()) f.tables = {tables.begin(), tables.end()};
    auto cells = verify_tables(f, cfg);
    std::cout << "table,line,family,rank,weight,char,dim,"
                 "max_s,rel_s,expected_s,ok_s,max_u,rel_u,expected_u,ok_u,nu,rel_nu,expected_nu,ok_nu,status,error\n";
    int failed = 0, eq_failed = 0;
    for (const auto& c : cells) {
        const auto& row = *c.row;
        const TableCell* cols[3] = {&row.max_s, &row.max_u, &row.nu};
        std::cout << row.table << "," << row.line << "," << family_letter(row.family) << "," << c.l << ","
                  << csv_field(row.weight.text()) << "," << c.p << ",";
        std::cout << (c.result ? std::to_string(c.result->dim_v) : "");
        long long got[3] = {0, 0, 0};
        if (c.result) {
            got[0] = c.result->max_s;
            got[1] = c.result->max_u;
            got[2] = c.result->nu;
        }
        for (int k = 0; k < 3; ++k) {
            std::cout << "," << (c.result ? std::to_string(got[k]) : "") << "," << to_string(cols[k]->rel) << ","
                      << c.expected[k] << "," << (c.ok[k] ? 1 : 0);
            if (c.result && !c.ok[k] && cols[k]->rel == Relation::Eq) ++eq_failed;
        }
        std::cout << "," << (c.passed() ? "pass" : "fail") << "," << csv_field(c.error) << "\n";
        if (!c.passed()) ++failed;
        if (!c.error.empty()) ++eq_failed;
    }
    std::cerr << cells.size() << " cells, " << cells.size() - failed << " passed, " << failed << " failed\n";
    return eq_failed ? 1 : 0;
}

int cmd_slambda(const SpecArgs& a, bool json) {
    ModuleSpec spec = a.spec();
    validate(spec.fr);
    if (static_cast<int>(spec.highest.size()) != spec.fr.rank)
        throw Error("InvalidWeight", "weight length does not match the rank");
    std::string via;
    if (spec.fr.family == Family::B && spec.p == 2) {
        auto tr = translate_b_to_c(spec.highest, 2);
        via = "B->C isogeny: " + tr.recipe;
        spec = {{Family::C, spec.fr.rank}, tr.c_weight, 2};
    }
    const bool laced = spec.fr.family == Family::A || spec.fr.family == Family::D;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& mu : s_lambda_weights(spec)) {
        auto sub = Subsystem::of_weight(mu);
        nlohmann::ordered_json t;
        t["weight"] = mu;
        t["r_long"] = r_psi_length(spec.fr, sub, true).str();
        if (!laced) t["r_short"] = r_psi_length(spec.fr, sub, false).str();
        terms.push_back(t);
    }
    BigInt s = s_lambda(spec);
    if (json) {
        nlohmann::ordered_json j;
        j["family"] = std::string(1, family_letter(spec.fr.family));
        j["rank"] = spec.fr.rank;
        j["weight"] = spec.highest;
        j["char"] = spec.p;
        j["s_lambda"] = s.str();
        if (!via.empty()) j["via"] = via;
        j["terms"] = terms;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << to_string(spec.fr) << " L(" << weight_to_string(spec.highest) << ") p=" << spec.p << "\n";
    if (!via.empty()) std::cout << "  via " << via << "\n";
    for (const auto& t : terms) {
        std::cout << "  " << weight_to_string(t["weight"].get<Weight>()) << "  r_long " << t["r_long"].get<std::string>();
        if (!laced) std::cout << "  r_short " << t["r_short"].get<std::string>();
        std::cout << "\n";
    }
    std::cout << "  s_lambda " << s << "\n";
    return 0;
}

int cmd_oracle(const std::vector<std::string>& ids, const std::string& list_file, int threads, bool list_only) {
    std::vector<OracleCase> cases;
    std::vector<std::string> wanted = ids;
    if (!list_file.empty()) {
        std::ifstream in(list_file);
        if (!in) throw Error("IOError", "cannot open case list " + list_file);
        std::string line;
        while (std::getline(in, line)) {
            auto t = trim(line);
            if (!t.empty() && t[0] != '#') wanted.push_back(t);
        }
    }
    if (wanted.empty())
        cases = standard_oracle_cases();
    else
        for (const auto& id : wanted) cases.push_back(find_oracle_case(id));
    if (list_only) {
        for (const auto& c : cases)
            std::cout << c.id << " " << to_string(c.fr) << " " << c.construction.name() << " p=" << c.p << " dim "
                      << construction_dim(c.fr, c.construction) << "\n";
        return 0;
    }
    int failed = 0;
    for (const auto& rep : cross_check(cases, threads)) {
        std::cout << rep.case_id << "  " << to_string(rep.spec.fr) << " L(" << weight_to_string(rep.spec.highest)
                  << ") p=" << rep.spec.p << "  construction " << rep.construction_dim << "  L " << rep.oracle_dim
                  << "  " << (rep.passed() ? "PASS" : "FAIL") << "\n";
        if (!rep.error.empty()) std::cout << "    error: " << rep.error << "\n";
        for (const auto& row : rep.rows)
            std::cout << "    " << (row.ok() ? "ok  " : "BAD ") << row.element << "  formula " << row.formula
                      << "  oracle " << row.oracle << "\n";
        if (!rep.passed()) ++failed;
    }
    std::cerr << cases.size() << " cases, " << failed << " failed\n";
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nu: eigenspace bounds for irreducible modules of classical groups"};
    app.require_subcommand(1);

    EngineConfig cfg;
    SpecArgs compute_args, slambda_args;
    bool json = false, slambda_json = false;
    auto* compute = app.add_subcommand("compute", "dim, max_s, max_u and nu of one module");
    compute_args.add(compute);
    compute->add_flag("--json", json, "one line of JSON");
    add_search_flags(compute, cfg);

    VerifyFilter filter;
    std::vector<int> tables;
    auto* verify = app.add_subcommand("verify-tables", "compare against the golden tables, CSV on stdout");
    verify->add_option("--table", tables, "table number 1..4 (repeatable, default all)")->check(CLI::Range(1, 4));
    verify->add_option("--min-rank", filter.min_rank, "lowest rank (default: per-table acceptance window)");
    verify->add_option("--max-rank", filter.max_rank, "highest rank (default: per-table acceptance window)");
    verify->add_option("--chars", filter.chars, "characteristics")->delimiter(',');
    verify->add_option("--threads", filter.threads, "worker threads (0: all cores)");
    add_search_flags(verify, cfg);

    auto* slambda = app.add_subcommand("slambda", "lower bound s_lambda and its terms");
    slambda_args.add(slambda);
    slambda->add_flag("--json", slambda_json, "one line of JSON");

    std::vector<std::string> case_ids;
    std::string case_file;
    int oracle_threads = 0;
    bool list_only = false;
    auto* oracle = app.add_subcommand("oracle-check", "explicit-matrix cross-check (all cases when none given)");
    oracle->add_option("--case", case_ids, "case id from data/oracle_cases.txt (repeatable)");
    oracle->add_option("--case-list", case_file, "file with one case id per line");
    oracle->add_option("--threads", oracle_threads, "worker threads (0: all cores)");
    oracle->add_flag("--list", list_only, "print the selected cases and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return cmd_compute(compute_args, cfg, json);
        if (*verify) return cmd_verify(filter, tables, cfg);
        if (*slambda) return cmd_slambda(slambda_args, slambda_json);
        if (*oracle) return cmd_oracle(case_ids, case_file, oracle_threads, list_only);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
