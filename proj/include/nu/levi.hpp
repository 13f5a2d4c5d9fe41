#pragma once

#include "nu/character.hpp"
#include "nu/rootsys.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nu {

// Restriction of L(lambda) to the derived subgroup of the Levi L_i obtained
// by deleting the simple root alpha_i (1-based). Levi weights are the
// fundamental coordinates of G with coordinate i removed.

// alpha_i-coefficient of lambda - w0(lambda).
int max_level(const ModuleSpec& spec, int i);
// Closed forms valid for i = 1 in every family, and for i = l in type C.
// Returns -1 where no closed form applies.
int max_level_closed_form(const ModuleSpec& spec, int i);

RootSystem levi_root_system(const FamilyRank& fr, int i);
Weight restrict_to_levi(const Weight& mu, int i);
// "2w2+w3" with G's indices (coordinate i skipped), "0" for the zero weight.
std::string levi_weight_to_string(const Weight& levi_weight, int i);

struct LevelDecomposition {
    ModuleSpec spec;
    int i = 1;
    RootSystem levi;
    std::vector<Character> levels;  // levels[j]: weights lambda - j alpha_i - (Levi roots)

    long long dim() const;
};

LevelDecomposition level_decompose(const ModuleSpec& spec, const Character& ch, int i);

// Characteristic-zero factor list of a level: Levi highest weight -> multiplicity.
using LeviFactorList = std::vector<std::pair<Weight, long long>>;
LeviFactorList decompose_level(const RootSystem& levi, const Character& level);
Character synthesize_level(const RootSystem& levi, const LeviFactorList& factors);

// For self-dual L(lambda): level e-j is the dual of level j for all j.
bool check_level_duality(const LevelDecomposition& dec);

} // namespace nu
