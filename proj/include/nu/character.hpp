#pragma once

#include "nu/common.hpp"
#include "nu/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace nu {

// Formal character: weight -> multiplicity. `ambient` names the root system
// the weights live on, so that mixing characters of different groups fails
// loudly instead of silently producing nonsense.
struct Character {
    std::string ambient;
    std::map<Weight, long long> mult;

    long long dim() const;
    long long at(const Weight& w) const;
    bool operator==(const Character& o) const { return ambient == o.ambient && mult == o.mult; }
};

struct ModuleSpec {
    FamilyRank fr;
    Weight highest;
    int p = 0;
};

std::string ambient_name(const RootSystem& rs);

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda);
BigInt weyl_dim(const FamilyRank& fr, const Weight& lambda);

// Characteristic-zero character of L(lambda) by Freudenthal's recursion.
Character freudenthal_character(const RootSystem& rs, const Weight& lambda);
Character freudenthal_character(const FamilyRank& fr, const Weight& lambda);

Character tensor(const Character& a, const Character& b);
Character wedge(int k, const Character& a);
Character sym(int k, const Character& a);
Character direct_sum(const Character& a, const Character& b);
// a - k*b; throws Mismatch if a multiplicity would become negative
Character subtract(const Character& a, const Character& b, long long k = 1);
// Weights multiplied by q (Frobenius twist).
Character frobenius_twist(const Character& a, int q);
// Weyl orbit of a single weight, each element with multiplicity one.
Character orbit_character(const RootSystem& rs, const Weight& lambda);

// Dominant mu with lambda - mu in the positive root cone, sorted by depth.
std::vector<Weight> subdominant_weights(const RootSystem& rs, const Weight& lambda);
std::vector<Weight> subdominant_weights(const FamilyRank& fr, const Weight& lambda);

// lambda - mu over the simple roots if it is a nonnegative integer vector,
// empty optional otherwise.
std::optional<RootVector> root_cone_difference(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// True when lambda lies in the closure of the lowest p-alcove,
// <lambda + rho, beta^vee> <= p for every positive root beta. Weyl modules
// with such highest weights are irreducible.
bool in_lowest_alcove(const RootSystem& rs, const Weight& lambda, int p);

} // namespace nu
