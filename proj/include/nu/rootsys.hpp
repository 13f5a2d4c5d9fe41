#pragma once

#include "nu/common.hpp"

#include <map>
#include <optional>
#include <vector>

namespace nu {

// Throws InvalidRank unless the rank is inside the range handled for the
// family (A: l>=1, B: l>=3, C: l>=2, D: l>=4).
void validate(const FamilyRank& fr);

// Bourbaki Cartan matrix, cartan[i][j] = <alpha_j, alpha_i^vee> (0-based).
std::vector<std::vector<int>> classical_cartan(const FamilyRank& fr);

// Root datum attached to an arbitrary (possibly reducible) Cartan matrix, so
// that the same code serves G and its Levi subgroups.
class RootSystem {
public:
    explicit RootSystem(std::vector<std::vector<int>> cartan);
    static RootSystem build(const FamilyRank& fr);

    int rank() const { return static_cast<int>(cartan_.size()); }
    int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const std::optional<FamilyRank>& family_rank() const { return fr_; }

    // Positive roots in root coordinates, sorted by height and then
    // lexicographically; this is the total order used for enumerations.
    const std::vector<RootVector>& positive_roots() const { return positive_; }
    int positive_root_index(const RootVector& a) const;

    // (alpha_j, alpha_j)/2 for a W-invariant form normalised so that the
    // shortest simple root of each component has half-norm 1.
    int half_norm(int j) const { return d_[j]; }
    long long root_inner(const RootVector& a, const RootVector& b) const;
    long long weight_inner(const Weight& mu, const RootVector& a) const;
    // <mu, a^vee> = 2 (mu, a) / (a, a)
    int coroot_pairing(const Weight& mu, const RootVector& a) const;
    bool is_long(const RootVector& a) const;

    Weight root_to_weight(const RootVector& a) const;
    Weight reflect(const Weight& mu, int i) const;
    Weight dominant_representative(const Weight& mu) const;
    // w0 computed from the Weyl group action (valid for any Cartan matrix).
    Weight w0(const Weight& mu) const;

    std::vector<Rational> expand_over_simple_roots(const Weight& mu) const;
    // Row i = omega_i over alpha_1..alpha_l.
    const std::vector<std::vector<Rational>>& fundamental_in_simple() const { return fund_; }

    std::vector<std::vector<int>> components() const;
    // Type letter and rank of every connected component ('A','B','C','D').
    std::vector<std::pair<char, int>> component_types() const;
    BigInt weyl_group_order() const;
    std::size_t root_count() const { return 2 * positive_.size(); }

private:
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<RootVector> positive_;
    std::map<RootVector, int> index_;
    std::vector<std::vector<Rational>> fund_;
    std::optional<FamilyRank> fr_;
};

// <lambda, alpha_i^vee> with a 1-based coroot index.
int pairing(const Weight& lambda, int coroot_index);

// Closed-form longest element for the classical families.
Weight w0_image(const FamilyRank& fr, const Weight& lambda);
std::vector<Rational> expand_over_simple_roots(const FamilyRank& fr, const Weight& lambda);

bool is_dominant(const Weight& w);
bool is_restricted(const Weight& w, int p);

// Coordinates in the standard basis e_1..e_n of the natural module
// (n = l+1 for A, n = l otherwise). Spin weights are half-integral, so these
// helpers work with doubled coordinates.
int natural_coords(const FamilyRank& fr);
std::vector<int> weight_to_epsilon2(const FamilyRank& fr, const Weight& w);
Weight epsilon2_to_weight(const FamilyRank& fr, const std::vector<int>& x2);
Weight epsilon_to_weight(const FamilyRank& fr, const std::vector<int>& x);
std::vector<std::vector<int>> simple_roots_epsilon(const FamilyRank& fr);

} // namespace nu
