#pragma once

#include "nu/character.hpp"
#include "nu/expr.hpp"
#include "nu/pattern.hpp"

#include <map>
#include <string>
#include <vector>

namespace nu {

// Element s of the maximal torus given by exponents in the standard basis of
// the natural module: e_i(s) = zeta_M^{t_i} (for B the middle entry is 1, for
// C and D the inverse entries are implied). A weight nu with doubled
// coordinates nu2 takes the value zeta_{2M}^{t . nu2}; the factor 2 carries
// the choice of lift to the simply connected group on spin weights.
// Type A requires sum t = 0 mod M (determinant one).
struct TorusClass {
    FamilyRank fr;
    long long M = 1;
    std::vector<long long> t;

    // The element with alpha_j(s) = zeta_r^{a_j} for the simple roots.
    static TorusClass from_root_values(const FamilyRank& fr, long long r, const std::vector<long long>& a);
    std::string describe() const;
};

// Exponent k in [0, 2M) with nu(s) = zeta_{2M}^k.
long long evaluate_weight(const TorusClass& s, const Weight& nu);
// Eigenvalue exponent -> multiplicity.
std::map<long long, long long> eigen_multiset(const Character& ch, const TorusClass& s);
bool is_central(const TorusClass& s);

// A one-parameter subgroup z(c) of Z(L_i)^o acts on the level j of L(lambda)
// by c^e(j); returns e(j). z is k * omega_i^vee with k the least positive
// integer making it a cocharacter of the simply connected group.
long long central_level_scalar(const ModuleSpec& spec, int i, int j);

struct SearchConfig {
    int max_order = 0;           // primes r <= max_order are swept; 0 means 2l + 4
    long long max_points = 0;    // cap on sweep points per prime, 0 = no cap
    bool witness_catalog_only = false;
};

struct SemisimpleMax {
    long long value = 0;
    TorusClass witness;
    long long eigen_exponent = 0;  // witness eigenvalue zeta_{2M}^k
    std::string origin;            // "sweep" or "witness:<line>"
    long long points = 0;          // sweep points evaluated
};

// Witness elements stored in data/witnesses.txt:
//   FAMILY RANKS WEIGHT CHAR : M ; n1:x1, n2:x2, ...
// meaning n_i natural coordinates carry exponent x_i modulo M. Expressions
// may use l, p and G (a large prime standing for a generic root of unity).
constexpr long long kGenericOrder = 1009;

struct WitnessEntry {
    Family family;
    RankRange ranks;
    WeightPattern weight;
    CharCondition cond;
    Expr M;
    std::vector<std::pair<Expr, Expr>> blocks;
    int line = 0;

    bool matches(const ModuleSpec& spec) const;
    TorusClass instantiate(int l, int p) const { return instantiate(l, p, kGenericOrder); }
    // with the generic order G replaced by `generic`
    TorusClass instantiate(int l, int p, long long generic) const;
};

std::vector<WitnessEntry> load_witnesses(const std::string& path);
const std::vector<WitnessEntry>& standard_witnesses();

// Largest dim V_s(mu) over non-central s of prime order r != p with
// r <= config.max_order, and over the matching witness elements.
SemisimpleMax max_eigenspace_semisimple(const ModuleSpec& spec, const SearchConfig& config = {});
SemisimpleMax max_eigenspace_on_character(const ModuleSpec& spec, const Character& ch, const SearchConfig& config = {});

} // namespace nu
