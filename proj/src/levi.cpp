#include "nu/levi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace nu {

int max_level(const ModuleSpec& spec, int i) {
    const auto& lambda = spec.highest;
    Weight w0 = w0_image(spec.fr, lambda);
    Weight diff(lambda.size());
    for (size_t r = 0; r < diff.size(); ++r) diff[r] = lambda[r] - w0[r];
    Rational c = expand_over_simple_roots(spec.fr, diff)[i - 1];
    if (denominator(c) != 1) throw Error("Mismatch", "non-integral level");
    return static_cast<int>(numerator(c));
}

int max_level_closed_form(const ModuleSpec& spec, int i) {
    const auto& d = spec.highest;
    const int l = spec.fr.rank;
    const int sum = std::accumulate(d.begin(), d.end(), 0);
    if (i == 1) {
        switch (spec.fr.family) {
        case Family::A: return sum;
        case Family::B: return 2 * (sum - d[l - 1]) + d[l - 1];
        case Family::C: return 2 * sum;
        case Family::D: return 2 * (sum - d[l - 2] - d[l - 1]) + d[l - 2] + d[l - 1];
        }
    }
    if (i == l && spec.fr.family == Family::C) {
        int e = 0;
        for (int j = 0; j < l; ++j) e += (j + 1) * d[j];
        return e;
    }
    return -1;
}

RootSystem levi_root_system(const FamilyRank& fr, int i) {
    auto full = classical_cartan(fr);
    std::vector<std::vector<int>> sub;
    for (int r = 0; r < fr.rank; ++r) {
        if (r == i - 1) continue;
        std::vector<int> row;
        for (int c = 0; c < fr.rank; ++c)
            if (c != i - 1) row.push_back(full[r][c]);
        sub.push_back(std::move(row));
    }
    return RootSystem(std::move(sub));
}

Weight restrict_to_levi(const Weight& mu, int i) {
    Weight out;
    for (size_t r = 0; r < mu.size(); ++r)
        if (static_cast<int>(r) != i - 1) out.push_back(mu[r]);
    return out;
}

std::string levi_weight_to_string(const Weight& w, int i) {
    std::string out;
    for (size_t r = 0; r < w.size(); ++r) {
        if (!w[r]) continue;
        int index = static_cast<int>(r) + 1 + (static_cast<int>(r) + 1 >= i ? 1 : 0);
        if (!out.empty()) out += "+";
        if (w[r] != 1) out += std::to_string(w[r]);
        out += "w" + std::to_string(index);
    }
    return out.empty() ? "0" : out;
}

long long LevelDecomposition::dim() const {
    long long s = 0;
    for (const auto& c : levels) s += c.dim();
    return s;
}

LevelDecomposition level_decompose(const ModuleSpec& spec, const Character& ch, int i) {
    if (i < 1 || i > spec.fr.rank) throw Error("InvalidIndex", "simple root index " + std::to_string(i));
    auto rs = RootSystem::build(spec.fr);
    LevelDecomposition dec{spec, i, levi_root_system(spec.fr, i), {}};
    const int e = max_level(spec, i);
    dec.levels.resize(e + 1);
    for (auto& c : dec.levels) c.ambient = ambient_name(dec.levi);
    for (const auto& [mu, m] : ch.mult) {
        auto c = root_cone_difference(rs, spec.highest, mu);
        if (!c) throw Error("MalformedCharacter", weight_to_string(mu) + " is not below " + weight_to_string(spec.highest));
        int j = (*c)[i - 1];
        if (j > e) throw Error("MalformedCharacter", weight_to_string(mu) + " lies beyond the last level");
        dec.levels[j].mult[restrict_to_levi(mu, i)] += m;
    }
    return dec;
}

LeviFactorList decompose_level(const RootSystem& levi, const Character& level) {
    std::map<Weight, long long> rest;
    for (const auto& [w, m] : level.mult)
        if (m) rest[w] = m;
    LeviFactorList out;
    while (!rest.empty()) {
        // maximal dominant weights; ties broken by the lexicographically largest
        std::vector<Weight> dominant;
        for (const auto& [w, m] : rest)
            if (is_dominant(w)) dominant.push_back(w);
        if (dominant.empty()) throw Error("InconsistentLevel", "no dominant weight left in a nonzero remainder");
        std::optional<Weight> top;
        for (auto it = dominant.rbegin(); it != dominant.rend() && !top; ++it) {
            bool maximal = true;
            for (const auto& other : dominant) {
                if (other == *it) continue;
                Weight diff(it->size());
                for (size_t r = 0; r < diff.size(); ++r) diff[r] = other[r] - (*it)[r];
                bool above = true;
                for (const auto& x : levi.expand_over_simple_roots(diff)) above = above && x >= 0;
                if (above) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) top = *it;
        }
        const long long m = rest[*top];
        if (m < 0) throw Error("InconsistentLevel", "negative multiplicity at " + weight_to_string(*top));
        out.emplace_back(*top, m);
        for (const auto& [w, k] : freudenthal_character(levi, *top).mult) {
            auto& slot = rest[w];
            slot -= m * k;
            if (slot < 0) throw Error("InconsistentLevel", "negative multiplicity at " + weight_to_string(w));
            if (slot == 0) rest.erase(w);
        }
    }
    return out;
}

Character synthesize_level(const RootSystem& levi, const LeviFactorList& factors) {
    Character out;
    out.ambient = ambient_name(levi);
    for (const auto& [w, m] : factors)
        for (const auto& [v, k] : freudenthal_character(levi, w).mult) out.mult[v] += m * k;
    return out;
}

bool check_level_duality(const LevelDecomposition& dec) {
    Weight neg = dec.spec.highest;
    for (int& x : neg) x = -x;
    if (w0_image(dec.spec.fr, dec.spec.highest) != neg)
        throw Error("NotSelfDual", weight_to_string(dec.spec.highest) + " for " + to_string(dec.spec.fr));
    const size_t e = dec.levels.size() - 1;
    for (size_t j = 0; j <= e; ++j) {
        std::map<Weight, long long> dual;
        for (const auto& [w, m] : dec.levels[j].mult) {
            Weight v = w;
            for (int& x : v) x = -x;
            dual[v] = m;
        }
        if (dual != dec.levels[e - j].mult) return false;
    }
    return true;
}

} // namespace nu
