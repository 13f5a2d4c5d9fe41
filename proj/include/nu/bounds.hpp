#pragma once

#include "nu/character.hpp"
#include "nu/rootsys.hpp"

#include <vector>

namespace nu {

// Standard subsystem spanned by a set of simple roots (1-based indices).
struct Subsystem {
    std::vector<int> simple_roots;

    // Psi(lambda') = < alpha_i : a_i = 0 >
    static Subsystem of_weight(const Weight& w);
};

long long subsystem_root_count(const FamilyRank& fr, const Subsystem& sub);
BigInt subsystem_weyl_order(const FamilyRank& fr, const Subsystem& sub);

// r_Psi = |W : W(Psi)| |Phi \ Psi| / (2 |Phi_s|), Phi_s the short roots
// (all roots in the simply laced types).
Rational r_psi(const FamilyRank& fr, const Subsystem& sub);
// The same count restricted to roots of one length:
//   r^L_Psi = |W : W(Psi)| |Phi_L \ Psi_L| / (2 |Phi_L|),
// which is half the number of weights in the orbit of lambda' that pair
// nontrivially with a fixed root of length L. Always an integer.
BigInt r_psi_length(const FamilyRank& fr, const Subsystem& sub, bool long_roots);
// s_lambda = min over root lengths L of the sum of r^L over the dominant
// lambda' below lambda. In the simply laced types this is the sum of r_Psi.
BigInt s_lambda(const FamilyRank& fr, const Weight& lambda);

// The dominant weights the sum runs over for L(lambda) in characteristic p.
// For restricted lambda these are all dominant weights below lambda, except
// for B and C in characteristic 2, where L(lambda) can lose some of them
// (C_3 omega_3 has no omega_1 weight at p = 2) and the weights are read off
// the modular character. B at p = 2 is not handled here: callers translate
// to C through the isogeny, which preserves nu.
std::vector<Weight> s_lambda_weights(const ModuleSpec& spec);
BigInt s_lambda(const ModuleSpec& spec);

} // namespace nu
