#pragma once

#include "nu/common.hpp"
#include "nu/field.hpp"
#include "nu/rootsys.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nu {

// The natural module W of the classical group in the standard basis
//   A: v_1..v_{l+1}
//   C, D: v_1..v_l, v_{-l}..v_{-1}
//   B: v_1..v_l, v_0, v_{-l}..v_{-1}
// with the form J(v_i, v_{-i}) = 1 (skew for C) and J(v_0, v_0) = 2 for B.
struct NaturalModule {
    FamilyRank fr;
    int dim = 0;
    std::vector<std::vector<int>> eps;   // weight of each basis vector, epsilon coordinates
    std::vector<Weight> weights;         // same, fundamental-weight coordinates
    std::vector<std::vector<long long>> gram;  // empty for type A

    static NaturalModule build(const FamilyRank& fr);

    // Integral generator X of the root space for the root beta (given over
    // the simple roots, any sign), normalised to a primitive integer matrix.
    std::vector<std::vector<long long>> root_matrix(const RootVector& beta) const;
    // x_beta(t) = sum_m t^m X^m / m!, returned as the list of coefficient
    // matrices for m = 0, 1, 2, ...; throws Mismatch if X^m/m! is not integral.
    std::vector<std::vector<std::vector<long long>>> root_element_series(const RootVector& beta) const;
};

// Functor expression built from the natural module. Spin stands for the
// spin module of B (k = l) or a half-spin module of D (k = l-1 or l), realised
// on the exterior algebra of a maximal isotropic subspace.
struct ModuleExpr {
    enum Kind { Natural, Dual, Wedge, Sym, Tensor, Spin } kind = Natural;
    int k = 0;
    BigInt spin_dim = 0;
    std::vector<std::shared_ptr<const ModuleExpr>> kids;

    std::string describe() const;
    BigInt dimension(int natural_dim) const;
};
using ModuleExprP = std::shared_ptr<const ModuleExpr>;

ModuleExprP natural_expr();
ModuleExprP dual_expr(ModuleExprP m);
ModuleExprP wedge_expr(int k, ModuleExprP m);
ModuleExprP sym_expr(int k, ModuleExprP m);
ModuleExprP tensor_expr(ModuleExprP a, ModuleExprP b);
ModuleExprP spin_expr(const FamilyRank& fr, int fundamental);

// A construction containing L(lambda) as the head of the submodule generated
// by its (unique) highest weight vector, possibly after a symmetry: the
// model realises model_weight = sigma(lambda), where sigma is a permutation
// of the Dynkin nodes (D4 triality, the D graph swap) optionally followed by
// duality (type A).
struct ConstructionPlan {
    FamilyRank fr;
    Weight lambda;
    Weight model_weight;
    ModuleExprP expr;
    std::vector<int> perm;   // model coordinate j = lambda coordinate perm[j]
    bool dual = false;

    Weight to_model(const Weight& w) const;
    Weight from_model(const Weight& w) const;
    std::string describe() const;
};

// Smallest available construction over the symmetries of the Dynkin diagram.
std::optional<ConstructionPlan> plan_construction(const FamilyRank& fr, const Weight& lambda);

// Sparse image of a basis vector under x_beta(t) - 1: entries t^power * coef * basis[index].
struct Term {
    int power;
    int index;
    Elem coef;
};

// The construction realised over F_p, with x_beta(t) for a chosen set of roots.
class ExplicitModule {
public:
    ExplicitModule(const FamilyRank& fr, const ModuleExprP& expr, const PrimeField& f,
                   const std::vector<RootVector>& roots);

    int dim() const { return static_cast<int>(weights_.size()); }
    const std::vector<Weight>& weights() const { return weights_; }
    const PrimeField& field() const { return f_; }
    // images(r)[b] lists the terms of (x_beta(t) - 1) b for roots[r]
    const std::vector<std::vector<Term>>& images(int r) const { return images_.at(r); }
    int root_slot(const RootVector& beta) const;

private:
    PrimeField f_;
    std::vector<Weight> weights_;
    std::vector<RootVector> roots_;
    std::vector<std::vector<std::vector<Term>>> images_;
};

} // namespace nu
