#pragma once

#include "nu/character.hpp"

#include <string>
#include <vector>

namespace nu {

struct JordanType {
    std::vector<int> blocks;  // weakly decreasing
    int p = 0;

    int dim() const;
    bool operator==(const JordanType&) const = default;
};

JordanType make_jordan(std::vector<int> blocks, int p);
std::string to_string(const JordanType& j);

// Number of blocks, i.e. dim ker(u - 1).
int fixed_dim(const JordanType& j);

JordanType jordan_direct_sum(const JordanType& a, const JordanType& b);
// Clebsch-Gordan when p = 0 or p >= m + n - 1 for every block pair, explicit
// ranks over F_p otherwise (cached per block pair).
JordanType jordan_tensor(const JordanType& a, const JordanType& b);
JordanType jordan_wedge2(const JordanType& a);
JordanType jordan_sym2(const JordanType& a);

// Exterior square of a single block V_i in characteristic 2, through the
// recursion on q = the least power of two with i <= q.
JordanType gow_laffey_wedge2(int i);
inline int wedge2_fixed_dim_char2(int i) { return i / 2; }

// Jordan type of the unipotent matrix (functor applied to a block-diagonal
// unipotent with the given blocks) computed from explicit matrices over F_q.
// q = p for p > 0 and the prime 1000003 for p = 0. Serves as the reference
// the closed forms are tested against.
enum class Functor { Identity, Wedge2, Wedge3, Sym2, Sym3, TensorSelf };
JordanType explicit_functor_jordan(Functor f, const std::vector<int>& blocks, int p);
JordanType explicit_tensor_jordan(const std::vector<int>& a, const std::vector<int>& b, int p);

enum class RootChoice { Alpha1, AlphaEll };

struct RootElementSpec {
    FamilyRank fr;
    RootChoice which = RootChoice::Alpha1;

    int simple_index() const { return which == RootChoice::Alpha1 ? 0 : fr.rank - 1; }
};

std::string to_string(const RootElementSpec& re);

// Jordan type of x_alpha(1) on the natural module in characteristic p.
JordanType root_element_on_natural(const RootElementSpec& re, int p = 0);

// Root-element class representatives: alpha_1 for A and D, alpha_1 and
// alpha_l for B and C (long and short roots differ there).
std::vector<RootElementSpec> root_element_representatives(const FamilyRank& fr);

// Sum of the fixed dimensions of the layers of a k[u]-filtration.
long long filtration_bound(const std::vector<long long>& level_fixed_dims);

struct UnipotentMax {
    long long value = 0;
    RootElementSpec witness;
    JordanType jordan;
    bool exact = true;
    std::string method;  // "weight-strings", "model", "steinberg"
};

// Largest dim V_u(1) over the root-element representatives.
UnipotentMax max_fixed_space_unipotent(const ModuleSpec& spec);

// For p = 0 or p above every <nu, beta^vee>, x_beta(1) acts on each beta-string
// of weights like the corresponding SL2 module, so the character alone fixes
// the Jordan type.
JordanType jordan_from_weight_strings(const RootSystem& rs, const Character& ch, int simple_index, int p);

} // namespace nu
