#pragma once

#include "nu/character.hpp"
#include "nu/modular.hpp"
#include "nu/unipotent.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace nu {

enum class CharacterSource { Weyl, Model, Steinberg };
std::string to_string(CharacterSource s);

// True when no dominant mu < lambda lies in the dot-orbit of lambda under the
// affine Weyl group W_p. By the linkage principle the Weyl module is then
// simple. Always true for p = 0.
bool weyl_module_is_simple(const RootSystem& rs, const Weight& lambda, int p);

// Image of x under the affine Weyl group, reduced into the closure of the
// fundamental p-alcove. Input and output are coordinates of lambda + rho.
Weight alcove_reduce(const RootSystem& rs, Weight x, int p);

// L(lambda) in characteristic p with its character and the Jordan types of
// simple root elements. Instances are cached per (family, rank, lambda, p)
// and shared.
class Irreducible {
public:
    static std::shared_ptr<const Irreducible> get(const FamilyRank& fr, const Weight& lambda, int p);

    const FamilyRank& fr() const { return fr_; }
    const Weight& highest() const { return lambda_; }
    int p() const { return p_; }
    const Character& character() const { return character_; }
    long long dim() const { return character_.dim(); }
    CharacterSource source() const { return source_; }

    // Jordan type of x_{alpha_i}(1), i the 0-based simple root index.
    JordanType root_element_jordan(int simple_index) const;

private:
    Irreducible(const FamilyRank& fr, const Weight& lambda, int p);
    const IrreducibleModel& model() const;

    FamilyRank fr_;
    Weight lambda_;
    int p_;
    Character character_;
    CharacterSource source_ = CharacterSource::Weyl;
    std::vector<std::shared_ptr<const Irreducible>> twisted_factors_;  // Steinberg: L(lambda_k), k = 0, 1, ...
    mutable std::once_flag model_once_;
    mutable std::unique_ptr<IrreducibleModel> model_;
    mutable std::mutex jordan_mu_;
    mutable std::map<int, JordanType> jordan_cache_;
};

} // namespace nu
