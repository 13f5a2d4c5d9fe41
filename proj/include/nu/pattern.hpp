#pragma once

#include "nu/common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nu {

// Pieces shared by the data files (catalog, tables, witnesses, oracle cases).

// "3", "3..8", "3.." (open above)
struct RankRange {
    int lo = 1;
    int hi = -1;  // -1: unbounded

    static RankRange parse(const std::string& s);
    bool contains(int l) const { return l >= lo && (hi < 0 || l <= hi); }
    std::string text() const;
};

// "all", "p=3", "p=3,5", "p!=2", "p!=2,3". Characteristic zero never equals
// a prime, so "p!=2" admits p = 0.
struct CharCondition {
    enum Kind { All, Equal, NotEqual } kind = All;
    std::vector<int> primes;

    static CharCondition parse(const std::string& s);
    bool matches(int p) const;
    std::string text() const;
};

// Sum of terms c*w<index> where index is an integer or an affine expression
// in l: "w1", "2w1+wl", "w(l-1)+wl", "w1+w3+w4", "0".
class WeightPattern {
public:
    static WeightPattern parse(const std::string& s);
    // Instantiated weight at rank l, or nothing when an index falls outside 1..l.
    std::optional<Weight> at(int l) const;
    const std::string& text() const { return text_; }

private:
    struct Term {
        int coef;
        int l_coef;  // index = l_coef * l + offset
        int offset;
    };
    std::vector<Term> terms_;
    std::string text_;
};

// Split on a separator, trimming blanks around each piece.
std::vector<std::string> split_trim(const std::string& s, char sep);
std::string trim(const std::string& s);

// Data directory: $NU_CATALOG_DIR if set, else the compiled-in default.
std::string data_dir();

} // namespace nu
