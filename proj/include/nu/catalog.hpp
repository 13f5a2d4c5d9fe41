#pragma once

#include "nu/character.hpp"
#include "nu/expr.hpp"
#include "nu/pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nu {

struct CatalogEntry {
    Family family;
    RankRange ranks;
    WeightPattern weight;
    CharCondition cond;
    Expr dim;
    int line = 0;

    bool matches(const ModuleSpec& spec) const;
};

// Dimensions of irreducible modules in positive characteristic, read from
// data/catalog.txt.
class Catalog {
public:
    static Catalog load(const std::string& path);
    // The catalog in data_dir(), loaded once.
    static const Catalog& standard();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* find(const ModuleSpec& spec) const;
    std::optional<BigInt> lookup(const ModuleSpec& spec) const;

private:
    std::vector<CatalogEntry> entries_;
};

// Dimension of L(lambda): the catalog value when listed, the Weyl dimension
// when p = 0 or the linkage principle forces the Weyl module to be simple.
// Anything else throws UnknownModularDim.
BigInt irreducible_dim(const ModuleSpec& spec);

// Same, but falls back to the explicit modular character instead of failing.
BigInt modular_dim(const ModuleSpec& spec);

} // namespace nu
