// Acceptance run: one PASS/FAIL line per criterion on stdout, details on
// stderr. Every comparison is exact integer equality (or the stated
// inequality for '<='/'>=' cells); there is no numeric tolerance anywhere.
//
// Exit status: 0 when every criterion passes. With --documented, 0 when the
// failures are exactly the table discrepancies pinned below, each of which
// the explicit-matrix oracle confirms; a new failure or a pinned entry that
// starts passing makes the run fail.

#include "nu/bounds.hpp"
#include "nu/catalog.hpp"
#include "nu/engine.hpp"
#include "nu/irreducible.hpp"
#include "nu/levi.hpp"
#include "nu/oracle.hpp"
#include "nu/unipotent.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace nu;

namespace {

constexpr long long kTolerance = 0;  // |computed - expected| allowed on '=' cells

constexpr int kCriterion5MaxRank = 4;
constexpr long long kCriterion5MaxDim = 300;
constexpr size_t kCriterion5MinCases = 40;
constexpr int kFreudenthalMaxRank = 8;
constexpr int kLevelDualityMaxRank = 8;
constexpr int kClosedFormMaxRank = 10;
constexpr int kWedgeBlockMax = 64;
constexpr int kGowLaffeyExplicitMax = 12;
constexpr int kSymbolicMaxRank = 16;
// s_lambda for C at p = 2 reads the weights off a modular character
constexpr long long kModularWeightsMaxDim = 1024;

const std::vector<int> kAllChars{0, 2, 3, 5, 7};

// Cells where the table value disagrees with both the engine and the
// explicit-matrix oracle (case ids in parentheses). Key: cell label and the
// failing columns among s, u, nu.
const std::map<std::string, std::string> kDocumented = {
    // max_s = 9 via diag(z,z,z,z^-3), z of order 3 (a3-nw2-2)
    {"T1 A3 w1+w2 p=2", "s"},
    // L(omega_2) is the 5-dimensional orthogonal module, max_s = 4 (c2-w2-*)
    {"T2 C2 w2 p=0", "s"},
    {"T2 C2 w2 p=3", "s"},
    {"T2 C2 w2 p=5", "s"},
    {"T2 C2 w2 p=7", "s"},
    // x_{alpha_4}(1) fixes 154 > 144 dimensions (c4-nw3-2)
    {"T2 C4 w1+w3 p=2", "u,nu"},
    // long root element on wedge^3 W fixes one more dimension (b4-w3-*, b5-w3-0)
    {"T3 B4 w3 p=0", "u"},
    {"T3 B4 w3 p=3", "u"},
    {"T3 B4 w3 p=5", "u"},
    {"T3 B4 w3 p=7", "u"},
    {"T3 B5 w3 p=0", "u"},
    {"T3 B5 w3 p=3", "u"},
    {"T3 B5 w3 p=5", "u"},
    {"T3 B5 w3 p=7", "u"},
    // same count on wedge^4 W and wedge^5 W (b5-w4-0, b5-w5-0)
    {"T3 B5 w4 p=0", "u"},
    {"T3 B5 w4 p=3", "u"},
    {"T3 B5 w4 p=5", "u"},
    {"T3 B5 w4 p=7", "u"},
    {"T3 B5 2w5 p=0", "u,nu"},
    {"T3 B5 2w5 p=3", "u,nu"},
    {"T3 B5 2w5 p=5", "u,nu"},
    {"T3 B5 2w5 p=7", "u,nu"},
    // the C_2 omega_2 entries do not fit together: 5 - max(5, 3) is 0, not
    // nu = 1 (the nu entry is right, max_s is 4)
    {"T2 C2 w2 p=0 identity", "nu"},
    {"T2 C2 w2 p=3 identity", "nu"},
    {"T2 C2 w2 p=5 identity", "nu"},
    {"T2 C2 w2 p=7 identity", "nu"},
};

struct Outcome {
    bool pass = true;
    std::string summary;
    std::map<std::string, std::string> failures;  // label -> columns
    std::vector<std::string> notes;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
    return out;
}

bool within(long long computed, long long expected) {
    long long d = computed - expected;
    return (d < 0 ? -d : d) <= kTolerance;
}

bool holds(Relation r, long long computed, long long expected) {
    return r == Relation::Eq ? within(computed, expected) : check_relation(r, computed, expected);
}

Outcome table_criterion(int table, std::vector<int> chars, std::vector<NuResult>& computed) {
    VerifyFilter f;
    f.tables = {table};
    f.chars = std::move(chars);
    auto cells = verify_tables(f);
    Outcome o;
    int passed = 0;
    for (const auto& c : cells) {
        if (c.result) computed.push_back(*c.result);
        const TableCell* cols[3] = {&c.row->max_s, &c.row->max_u, &c.row->nu};
        std::vector<std::string> bad;
        if (c.result) {
            long long got[3] = {c.result->max_s, c.result->max_u, c.result->nu};
            static const char* names[3] = {"s", "u", "nu"};
            for (int k = 0; k < 3; ++k)
                if (!holds(cols[k]->rel, got[k], c.expected[k])) {
                    bad.push_back(names[k]);
                    std::ostringstream os;
                    os << c.label() << ": " << names[k] << " computed " << got[k] << ", table "
                       << to_string(cols[k]->rel) << " " << c.expected[k];
                    o.notes.push_back(os.str());
                }
        } else {
            bad.push_back("error");
            o.notes.push_back(c.label() + ": " + c.error);
        }
        if (bad.empty())
            ++passed;
        else
            o.failures[c.label()] = join(bad, ",");
    }
    o.pass = o.failures.empty() && !cells.empty();
    o.summary = std::to_string(passed) + "/" + std::to_string(cells.size()) + " cells";
    return o;
}

Outcome oracle_criterion() {
    std::vector<OracleCase> cases;
    for (const auto& c : standard_oracle_cases())
        if (c.fr.rank <= kCriterion5MaxRank && construction_dim(c.fr, c.construction) <= kCriterion5MaxDim)
            cases.push_back(c);
    Outcome o;
    std::set<Family> families;
    std::set<int> chars;
    size_t comparisons = 0, passed = 0;
    for (const auto& rep : cross_check(cases)) {
        families.insert(rep.spec.fr.family);
        chars.insert(rep.spec.p);
        comparisons += rep.rows.size();
        if (rep.passed()) {
            ++passed;
            continue;
        }
        o.failures[rep.case_id] = "oracle";
        o.notes.push_back(rep.case_id + ": " + (rep.error.empty() ? "formula and oracle differ" : rep.error));
        for (const auto& row : rep.rows)
            if (!row.ok())
                o.notes.push_back("  " + row.element + " formula " + std::to_string(row.formula) + " oracle " +
                                  std::to_string(row.oracle));
    }
    if (cases.size() < kCriterion5MinCases) o.notes.push_back("fewer than 40 cases");
    if (families.size() < 4) o.notes.push_back("not every family covered");
    if (chars.size() < kAllChars.size()) o.notes.push_back("not every characteristic covered");
    o.pass = o.failures.empty() && cases.size() >= kCriterion5MinCases && families.size() == 4 &&
             chars.size() == kAllChars.size();
    o.summary = std::to_string(passed) + "/" + std::to_string(cases.size()) + " cases, " +
                std::to_string(comparisons) + " element comparisons";
    return o;
}

// Module families named by the catalog and the golden tables, instantiated
// at ranks lo..max_rank.
struct Named {
    Family family;
    RankRange ranks;
    WeightPattern weight;
    CharCondition cond;
};

std::vector<Named> named_weights() {
    std::vector<Named> out;
    for (const auto& e : Catalog::standard().entries()) out.push_back({e.family, e.ranks, e.weight, e.cond});
    for (const auto& r : GoldenTables::standard().rows) out.push_back({r.family, r.ranks, r.weight, r.cond});
    return out;
}

template <class F>
void for_each_instance(int max_rank, F&& f) {
    std::set<std::pair<std::string, Weight>> seen;
    for (const auto& n : named_weights())
        for (int l = n.ranks.lo; l <= max_rank; ++l) {
            if (!n.ranks.contains(l)) continue;
            FamilyRank fr{n.family, l};
            try {
                validate(fr);
            } catch (const Error&) {
                continue;
            }
            auto w = n.weight.at(l);
            if (!w || !seen.insert({to_string(fr), *w}).second) continue;
            f(n, fr, *w);
        }
}

Outcome property_criterion(const std::vector<NuResult>& computed) {
    Outcome o;
    std::vector<std::string> parts;
    auto fail = [&](const std::string& key, const std::string& what) {
        o.failures[key] = "property";
        o.notes.push_back(key + ": " + what);
    };

    // Freudenthal multiplicities sum to the Weyl dimension; the catalog's
    // dimension expressions agree with it in characteristic 0
    int n1 = 0;
    for_each_instance(kFreudenthalMaxRank, [&](const Named& n, const FamilyRank& fr, const Weight& w) {
        ++n1;
        BigInt weyl = weyl_dim(fr, w);
        if (weyl != freudenthal_character(fr, w).dim())
            fail("freudenthal " + to_string(fr) + " " + weight_to_string(w), "total differs from Weyl");
        if (n.cond.matches(0))
            if (auto cat = Catalog::standard().lookup({fr, w, 0}); cat && *cat != weyl)
                fail("catalog " + to_string(fr) + " " + weight_to_string(w), "p = 0 dimension differs from Weyl");
    });
    parts.push_back(std::to_string(n1) + " Weyl/Freudenthal");

    // level duality for the self-dual modules, in every listed characteristic
    int n2 = 0;
    for_each_instance(kLevelDualityMaxRank, [&](const Named& n, const FamilyRank& fr, const Weight& w) {
        Weight neg = w;
        for (int& x : neg) x = -x;
        if (w0_image(fr, w) != neg) return;
        for (int p : kAllChars) {
            if (!n.cond.matches(p) || !is_restricted(w, p)) continue;
            if (fr.family == Family::B && p == 2) continue;
            ModuleSpec spec{fr, w, p};
            auto key = to_string(fr) + " " + weight_to_string(w) + " p=" + std::to_string(p);
            try {
                if (irreducible_dim(spec) > 5000) continue;
            } catch (const Error&) {
                if (weyl_dim(fr, w) > 5000) continue;
            }
            auto irr = Irreducible::get(fr, w, p);
            for (int i : {1, fr.rank}) {
                ++n2;
                try {
                    if (!check_level_duality(level_decompose(spec, irr->character(), i)))
                        fail("duality " + key, "levels not dual for i = " + std::to_string(i));
                } catch (const Error& e) {
                    fail("duality " + key, e.what());
                }
            }
        }
    });
    parts.push_back(std::to_string(n2) + " level dualities");

    // closed forms for e_i against the w0 computation
    int n3 = 0;
    for_each_instance(kClosedFormMaxRank, [&](const Named&, const FamilyRank& fr, const Weight& w) {
        ModuleSpec spec{fr, w, 0};
        std::vector<int> idx{1};
        if (fr.family == Family::C) idx.push_back(fr.rank);
        for (int i : idx) {
            ++n3;
            if (max_level(spec, i) != max_level_closed_form(spec, i))
                fail("e_i " + to_string(fr) + " " + weight_to_string(w) + " i=" + std::to_string(i),
                     "closed form " + std::to_string(max_level_closed_form(spec, i)) + " vs " +
                         std::to_string(max_level(spec, i)));
        }
    });
    parts.push_back(std::to_string(n3) + " e_i");

    // wedge^2 of a single Jordan block in characteristic 2
    for (int i = 1; i <= kWedgeBlockMax; ++i) {
        if (fixed_dim(gow_laffey_wedge2(i)) != i / 2 || wedge2_fixed_dim_char2(i) != i / 2 ||
            fixed_dim(jordan_wedge2(make_jordan({i}, 2))) != i / 2)
            fail("wedge2 J" + std::to_string(i), "fixed space is not floor(i/2)");
        if (i <= kGowLaffeyExplicitMax && gow_laffey_wedge2(i) != explicit_functor_jordan(Functor::Wedge2, {i}, 2))
            fail("gow-laffey J" + std::to_string(i), "recursion differs from the explicit matrix");
    }
    parts.push_back("wedge2 blocks 1.." + std::to_string(kWedgeBlockMax));

    // lower bound s_lambda on every computed row
    for (const auto& r : computed)
        if (r.s_lambda > r.nu)
            fail("s_lambda " + to_string(r.spec.fr) + " " + weight_to_string(r.spec.highest) + " p=" +
                     std::to_string(r.spec.p),
                 std::to_string(r.s_lambda) + " > nu " + std::to_string(r.nu));
    parts.push_back(std::to_string(computed.size()) + " s_lambda <= nu");

    o.pass = o.failures.empty();
    o.summary = join(parts, ", ");
    return o;
}

// Consistency of the tables as expressions in l, up to rank 16: the three
// columns and the module dimension must fit together (nu = dim - max where
// all three are equalities, '=' entries of max_s/max_u at most dim - nu
// otherwise), and s_lambda may not exceed an upper value for nu.
Outcome symbolic_criterion() {
    const auto& g = GoldenTables::standard();
    Outcome o;
    int checked = 0, unknown_dim = 0;
    for (const auto& row : g.rows)
        for (int l = row.ranks.lo; l <= kSymbolicMaxRank; ++l) {
            if (!row.ranks.contains(l)) continue;
            FamilyRank fr{row.family, l};
            try {
                validate(fr);
            } catch (const Error&) {
                continue;
            }
            auto w = row.weight.at(l);
            if (!w) continue;
            for (int p : kAllChars) {
                if (!row.cond.matches(p) || !is_restricted(*w, p)) continue;
                if (row.family == Family::B && p == 2) continue;
                ModuleSpec spec{fr, *w, p};
                std::ostringstream label;
                label << "T" << row.table << " " << family_letter(row.family) << l << " " << row.weight.text()
                      << " p=" << p << " identity";
                BigInt dim;
                try {
                    dim = irreducible_dim(spec);
                } catch (const Error& e) {
                    if (e.kind() != "UnknownModularDim") throw;
                    ++unknown_dim;
                    continue;
                }
                ++checked;
                auto env = g.env(row.table, l, p);
                BigInt s, u, nu;
                try {
                    s = row.max_s.expr.eval_int(env);
                    u = row.max_u.expr.eval_int(env);
                    nu = row.nu.expr.eval_int(env);
                } catch (const Error& e) {
                    o.failures[label.str()] = "expr";
                    o.notes.push_back(label.str() + ": " + e.what());
                    continue;
                }
                std::vector<std::string> bad;
                auto note = [&](const char* col, const std::string& what) {
                    bad.push_back(col);
                    o.notes.push_back(label.str() + ": " + what);
                };
                if (s < 0 || u < 0 || nu < 0 || s > dim || u > dim) note("range", "value outside 0..dim");
                const bool all_eq =
                    row.max_s.rel == Relation::Eq && row.max_u.rel == Relation::Eq && row.nu.rel == Relation::Eq;
                if (all_eq && nu != dim - std::max(s, u))
                    note("nu", "nu " + nu.str() + " but dim - max(max_s, max_u) = " + BigInt(dim - std::max(s, u)).str());
                if (!all_eq && row.nu.rel != Relation::Le) {
                    if (row.max_s.rel == Relation::Eq && s > dim - nu)
                        note("s", "max_s " + s.str() + " exceeds dim - nu = " + BigInt(dim - nu).str());
                    if (row.max_u.rel == Relation::Eq && u > dim - nu)
                        note("u", "max_u " + u.str() + " exceeds dim - nu = " + BigInt(dim - nu).str());
                }
                if (row.nu.rel != Relation::Ge && !(row.family == Family::C && p == 2 && dim > kModularWeightsMaxDim)) {
                    BigInt sl = s_lambda(spec);
                    if (sl > nu) note("s_lambda", "s_lambda " + sl.str() + " exceeds nu " + nu.str());
                }
                if (!bad.empty()) o.failures[label.str()] = join(bad, ",");
            }
        }
    o.pass = o.failures.empty();
    o.summary = std::to_string(checked) + " (row, l, p) instances up to rank " + std::to_string(kSymbolicMaxRank) +
                ", " + std::to_string(checked - static_cast<int>(o.failures.size())) + " consistent";
    if (unknown_dim) o.summary += ", " + std::to_string(unknown_dim) + " without a known modular dimension";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria 1-7"};
    bool documented = false;
    app.add_flag("--documented", documented,
                 "exit 0 when the failures are exactly the pinned, oracle-confirmed table discrepancies");
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        int id;
        std::string title;
        Outcome outcome;
        double secs = 0;
    };
    std::vector<Criterion> results;
    std::vector<NuResult> computed;
    auto run = [&](int id, const std::string& title, auto&& body) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("aborted: ") + e.what();
            o.failures["criterion " + std::to_string(id)] = "aborted";
        }
        results.push_back({id, title, std::move(o), seconds_since(t0)});
        const auto& c = results.back();
        std::cout << "criterion " << id << " " << (c.outcome.pass ? "PASS" : "FAIL") << "  " << title << ": "
                  << c.outcome.summary << " (" << std::fixed;
        std::cout.precision(1);
        std::cout << c.secs << " s)" << std::endl;
        for (const auto& n : c.outcome.notes) std::cerr << "  [" << id << "] " << n << "\n";
    };

    run(1, "Table 1, A_l, l=3..8, p in {0,2,3,5,7}", [&] { return table_criterion(1, kAllChars, computed); });
    run(2, "Table 2, C_l, l=2..5, p in {0,2,3,5,7}", [&] { return table_criterion(2, kAllChars, computed); });
    run(3, "Table 3, B_l, l=3..5, p in {0,3,5,7}", [&] { return table_criterion(3, {0, 3, 5, 7}, computed); });
    run(4, "Table 4, D_l, l=4..6, p in {0,2,3,5,7}", [&] { return table_criterion(4, kAllChars, computed); });
    run(5, "oracle equivalence, rank <= 4, dim <= 300", [&] { return oracle_criterion(); });
    run(6, "property suites", [&] { return property_criterion(computed); });
    run(7, "table expressions at symbolic rank", [&] { return symbolic_criterion(); });

    bool all_pass = true;
    std::map<std::string, std::string> failures;
    for (const auto& c : results) {
        all_pass = all_pass && c.outcome.pass;
        failures.insert(c.outcome.failures.begin(), c.outcome.failures.end());
    }
    int reproduced = 0;
    std::vector<std::string> unexpected, stale;
    for (const auto& [label, cols] : failures) {
        auto it = kDocumented.find(label);
        if (it != kDocumented.end() && it->second == cols)
            ++reproduced;
        else
            unexpected.push_back(label + " [" + cols + "]");
    }
    for (const auto& [label, cols] : kDocumented)
        if (!failures.count(label)) stale.push_back(label);
    std::cerr << "documented table discrepancies: " << reproduced << "/" << kDocumented.size() << " reproduced";
    if (!unexpected.empty()) std::cerr << "; unexpected: " << join(unexpected, "; ");
    if (!stale.empty()) std::cerr << "; no longer failing: " << join(stale, "; ");
    std::cerr << "\n";
    for (const auto& c : results)
        if (!c.outcome.pass && c.outcome.failures.empty()) unexpected.push_back("criterion " + std::to_string(c.id));

    if (documented) return unexpected.empty() && stale.empty() ? 0 : 1;
    return all_pass ? 0 : 1;
}
