#pragma once

#include "nu/character.hpp"
#include "nu/expr.hpp"
#include "nu/pattern.hpp"
#include "nu/semisimple.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nu {

struct EngineConfig {
    SearchConfig search;
    long long max_dim = 5000;
};

struct NuResult {
    ModuleSpec spec;
    long long dim_v = 0;

    long long max_s = 0;
    std::string s_witness;  // TorusClass::describe()
    long long s_eigen_exponent = 0;
    long long s_root_order = 0;  // eigenvalue is zeta_{s_root_order}^{s_eigen_exponent}
    std::string s_origin;
    long long s_points = 0;

    long long max_u = 0;
    std::string u_witness;
    std::string u_jordan;
    std::string u_method;

    long long nu = 0;
    long long s_lambda = 0;

    // max_u is exact (root elements lie in the closure of every non-trivial
    // unipotent class). max_s comes from the prime-order sweep and is exact
    // only under its order bound, so nu is flagged as an upper bound.
    bool max_u_exact = true;
    bool max_s_exact = false;
    std::string via;  // non-empty when computed through the B -> C isogeny
};

NuResult compute_nu(const ModuleSpec& spec, const EngineConfig& config = {});
// One line of deterministic JSON; field names are documented in docs/formats.md.
std::string to_json(const NuResult& r);

// Characteristic 2: L_B(sum d_i w_i) corresponds to L_C(2 sum_{i<l} d_i w_i + d_l w_l)
// under the special isogeny B_l -> C_l.
struct BToC {
    Weight c_weight;
    std::string recipe;  // "L(w_l) (x) L(d)^[2]" style description
};
BToC translate_b_to_c(const Weight& b_weight, int p);

enum class Relation { Eq, Le, Ge };
std::string to_string(Relation r);

struct TableCell {
    Relation rel = Relation::Eq;
    Expr expr;
};

struct TableRow {
    int table = 0;
    Family family;
    RankRange ranks;
    WeightPattern weight;
    CharCondition cond;
    TableCell max_s, max_u, nu;
    int line = 0;
};

struct GoldenTables {
    std::vector<TableRow> rows;
    // table -> ordered (name, expr) definitions
    std::map<int, std::vector<std::pair<std::string, Expr>>> lets;

    static GoldenTables load(const std::string& path);
    static const GoldenTables& standard();
    // Environment with l, p and the table's definitions evaluated.
    Expr::Env env(int table, int l, int p) const;
};

struct VerifyFilter {
    std::set<int> tables{1, 2, 3, 4};
    int min_rank = 0;   // 0: per-table default
    int max_rank = 0;   // 0: per-table default
    std::vector<int> chars{0, 2, 3, 5, 7};
    int threads = 0;    // 0: hardware concurrency
};

// Acceptance grid ranks for each table.
std::pair<int, int> default_rank_window(int table);

struct CellReport {
    const TableRow* row = nullptr;
    int l = 0;
    int p = 0;
    std::optional<NuResult> result;
    std::string error;
    long long expected[3] = {0, 0, 0};
    bool ok[3] = {false, false, false};

    bool passed() const { return result && ok[0] && ok[1] && ok[2]; }
    std::string label() const;
};

std::vector<CellReport> verify_tables(const VerifyFilter& filter, const EngineConfig& config = {});
bool check_relation(Relation r, long long computed, long long expected);

} // namespace nu
