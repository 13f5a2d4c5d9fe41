#pragma once

#include "nu/character.hpp"
#include "nu/field.hpp"
#include "nu/semisimple.hpp"

#include <memory>
#include <string>
#include <vector>

namespace nu {

// Brute-force models built from explicit matrices, sharing no code with the
// construction/model path of the engine beyond the field arithmetic and the
// dense functors. L(lambda) is cut out of a construction X as the image of
//   N = Dist(G) v+  inside X   under the pairing with   M = Dist(G) v-*  inside X*,
// v+ the highest weight vector of X and v-* the dual lowest weight vector.
// For g in G and a scalar mu,
//   dim L_g(mu) = rank(C^T B) - rank(C^T (g - mu) B),
// with B and C bases of N and M.

struct Construction {
    enum Kind { Wedge, Sym, TensorNatDual, TensorNatWedge } kind = Wedge;
    int k = 1;  // Wedge/Sym/TensorNatWedge power; natural is wedge1

    // natural, wedgeK, symK, tensor_nat_dual, nat_wedgeK
    static Construction parse(const std::string& s);
    std::string name() const;
};

// Highest weight of X, in fundamental coordinates.
Weight construction_highest_weight(const FamilyRank& fr, const Construction& c);
long long construction_dim(const FamilyRank& fr, const Construction& c);

struct OracleElement {
    enum Kind { Torus, Root } kind = Torus;
    TorusClass torus;          // Torus: eigenvalue zeta_{2M}^eigen_exponent, exponent even
    long long eigen_exponent = 0;
    int simple_index = 0;      // Root: x_{alpha_i}(1), 0-based, eigenvalue 1
    std::string label;
};

struct ModelStats {
    long long construction_dim = 0;
    long long irreducible_dim = 0;  // rank of the pairing
    std::uint64_t field_order = 0;
};

// Field used for an element of order dividing M: GF(p^k) with M | p^k - 1
// and p^k >= 64 for p > 0, a prime q = 1 mod M in [2^20, 2^24) for p = 0
// (`which` selects the first or second such prime).
std::unique_ptr<GaloisField> oracle_field(int p, long long M, int which = 0);

// Eigenspace dimension of the element on L(lambda) inside the construction.
// For p = 0 the computation runs over two primes and throws Mismatch when
// they disagree. Throws FieldUnavailable, TooLarge (construction above 3000)
// and Unsupported (odd eigen exponent, B in characteristic 2).
long long oracle_eigenspace_dim(const FamilyRank& fr, const Construction& c, int p, const OracleElement& e,
                                ModelStats* stats = nullptr);

// Form preservation and unipotence checks for the generators of the
// natural module; throws Mismatch on failure. Returns the number of
// generators checked.
int oracle_check_generators(const FamilyRank& fr, int p);

// A generic root of unity order for the oracle: the smallest prime g >= 29
// (g != p) for which every witness order expression of the catalog admits a
// field. Witnesses are reinstantiated with G = g on both sides.
long long oracle_generic_order(int p);

struct OracleCase {
    std::string id;
    FamilyRank fr;
    Construction construction;
    int p = 0;
    int line = 0;
};

// data/oracle_cases.txt:   ID FAMILY RANK CONSTRUCTION CHAR
std::vector<OracleCase> load_oracle_cases(const std::string& path);
const std::vector<OracleCase>& standard_oracle_cases();
const OracleCase& find_oracle_case(const std::string& id);

struct OracleComparison {
    std::string case_id;
    std::string element;
    long long formula = 0;
    long long oracle = 0;
    bool ok() const { return formula == oracle; }
};

struct OracleReport {
    std::string case_id;
    ModuleSpec spec;
    long long construction_dim = 0;
    long long formula_dim = 0;
    long long oracle_dim = 0;
    std::vector<OracleComparison> rows;
    std::string error;

    bool passed() const;
};

// Elements checked for a case: every matching witness (G reinstantiated),
// the maximiser of the semisimple sweep, and x_{alpha_1}(1), x_{alpha_l}(1).
std::vector<OracleElement> oracle_elements(const ModuleSpec& spec);

// Compares the oracle with the formula path (characters for torus
// elements, Jordan types from the unipotent module for root elements).
OracleReport cross_check(const OracleCase& c);
std::vector<OracleReport> cross_check(const std::vector<OracleCase>& cases, int threads = 0);

} // namespace nu
