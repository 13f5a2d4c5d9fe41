#pragma once

#include "nu/character.hpp"
#include "nu/construction.hpp"

#include <map>
#include <vector>

namespace nu {

// L(lambda) over F_p extracted from a construction: N is the submodule
// generated by the highest weight vector under divided powers of the
// lowering operators, K the span of the highest coordinate functional under
// the raising ones, and L_mu = N_mu / (N_mu cap K_mu^perp). Every weight space
// of L gets an explicit basis, so root elements act by explicit matrices.
class IrreducibleModel {
public:
    IrreducibleModel(const ConstructionPlan& plan, int p);

    const ConstructionPlan& plan() const { return plan_; }
    int p() const { return p_; }
    int dim() const { return dim_; }
    // Character of L(lambda) in the coordinates of lambda (not of the model).
    const Character& character() const { return character_; }

    // Jordan block sizes (decreasing) of x_beta(1), beta the simple root with
    // the given 0-based index in lambda's coordinates.
    std::vector<int> root_element_jordan(int simple_index) const;

private:
    struct Space {
        int offset = 0;
        int dim = 0;
        std::vector<std::vector<Elem>> vectors;      // C: representatives in V_mu
        std::vector<std::vector<Elem>> functionals;  // R: functionals on V_mu
        Matrix<PrimeField> q_inverse;
    };

    ConstructionPlan plan_;
    int p_;
    PrimeField f_;
    std::unique_ptr<ExplicitModule> module_;
    std::map<Weight, std::vector<int>> weight_basis_;  // weight -> basis indices of the construction
    std::vector<int> local_;                           // basis index -> position inside its weight space
    std::map<Weight, Space> spaces_;
    int dim_ = 0;
    Character character_;

    std::vector<Elem> apply(int root_slot, int m, const Weight& from, const std::vector<Elem>& x) const;
    std::vector<Elem> pull_back(int root_slot, int m, const Weight& at, const std::vector<Elem>& phi) const;
};

} // namespace nu
