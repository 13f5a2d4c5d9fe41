#include "nu/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace nu {

void validate(const FamilyRank& fr) {
    int lo = 1;
    switch (fr.family) {
    case Family::A: lo = 1; break;
    case Family::B: lo = 3; break;
    case Family::C: lo = 2; break;
    case Family::D: lo = 4; break;
    }
    if (fr.rank < lo)
        throw Error("InvalidRank", "rank " + std::to_string(fr.rank) + " below the minimum " +
                                       std::to_string(lo) + " for type " + family_letter(fr.family));
    if (fr.rank > 64) throw Error("InvalidRank", "rank too large");
}

std::vector<std::vector<int>> classical_cartan(const FamilyRank& fr) {
    const int l = fr.rank;
    std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) c[i][i] = 2;
    for (int i = 0; i + 1 < l; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    switch (fr.family) {
    case Family::A: break;
    case Family::B: c[l - 2][l - 1] = -1; c[l - 1][l - 2] = -2; break;   // alpha_l short
    case Family::C: c[l - 2][l - 1] = -2; c[l - 1][l - 2] = -1; break;   // alpha_l long
    case Family::D:
        c[l - 2][l - 1] = c[l - 1][l - 2] = 0;
        c[l - 3][l - 1] = c[l - 1][l - 3] = -1;
        break;
    }
    return c;
}

namespace {

// Solve cartan^T x = mu exactly: mu = sum_j x_j alpha_j and alpha_j has
// fundamental coordinates cartan[.][j].
std::vector<Rational> solve_simple(const std::vector<std::vector<int>>& cartan, const Weight& mu) {
    const int n = static_cast<int>(cartan.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = cartan[i][j];
        m[i][n] = mu[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw Error("InvalidRank", "singular Cartan matrix");
        std::swap(m[piv], m[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (int k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

} // namespace

RootSystem::RootSystem(std::vector<std::vector<int>> cartan) : cartan_(std::move(cartan)) {
    const int n = rank();
    // symmetriser, one BFS per connected component
    d_.assign(n, 0);
    std::vector<Rational> dr(n, 0);
    for (int s = 0; s < n; ++s) {
        if (dr[s] != 0) continue;
        std::vector<int> comp{s};
        dr[s] = 1;
        for (size_t k = 0; k < comp.size(); ++k) {
            int i = comp[k];
            for (int j = 0; j < n; ++j) {
                if (i == j || cartan_[i][j] == 0 || dr[j] != 0) continue;
                // d_i c_ij = d_j c_ji
                dr[j] = dr[i] * cartan_[i][j] / cartan_[j][i];
                comp.push_back(j);
            }
        }
        Rational mn = dr[comp[0]];
        for (int i : comp) mn = std::min(mn, dr[i]);
        for (int i : comp) {
            Rational v = dr[i] / mn;
            if (denominator(v) != 1) throw Error("InvalidRank", "non-integral symmetriser");
            d_[i] = static_cast<int>(numerator(v));
        }
    }

    // positive roots by height
    std::vector<RootVector> layer;
    for (int i = 0; i < n; ++i) {
        RootVector a(n, 0);
        a[i] = 1;
        layer.push_back(a);
    }
    std::set<RootVector> all(layer.begin(), layer.end());
    while (!layer.empty()) {
        std::set<RootVector> next;
        for (const auto& b : layer) {
            for (int i = 0; i < n; ++i) {
                // r = largest k with b - k alpha_i a root
                int r = 0;
                for (;;) {
                    RootVector c = b;
                    c[i] -= r + 1;
                    if (c[i] < 0 || !all.count(c)) break;
                    ++r;
                }
                int pair = 0;
                for (int j = 0; j < n; ++j) pair += b[j] * cartan_[i][j];
                if (r - pair > 0) {
                    RootVector c = b;
                    c[i] += 1;
                    next.insert(c);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        all.insert(next.begin(), next.end());
    }
    positive_.assign(all.begin(), all.end());
    std::stable_sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    for (size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);

    fund_.resize(n);
    for (int i = 0; i < n; ++i) {
        Weight w(n, 0);
        w[i] = 1;
        fund_[i] = solve_simple(cartan_, w);
    }
}

RootSystem RootSystem::build(const FamilyRank& fr) {
    validate(fr);
    RootSystem rs(classical_cartan(fr));
    rs.fr_ = fr;
    return rs;
}

int RootSystem::positive_root_index(const RootVector& a) const {
    auto it = index_.find(a);
    return it == index_.end() ? -1 : it->second;
}

long long RootSystem::root_inner(const RootVector& a, const RootVector& b) const {
    long long s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < rank(); ++j) s += 1LL * a[i] * b[j] * d_[i] * cartan_[i][j];
    }
    return s;
}

long long RootSystem::weight_inner(const Weight& mu, const RootVector& a) const {
    long long s = 0;
    for (int j = 0; j < rank(); ++j) s += 1LL * a[j] * d_[j] * mu[j];
    return s;
}

int RootSystem::coroot_pairing(const Weight& mu, const RootVector& a) const {
    long long num = 2 * weight_inner(mu, a), den = root_inner(a, a);
    return static_cast<int>(num / den);
}

bool RootSystem::is_long(const RootVector& a) const {
    // compare with the longest simple root of the component carrying a
    long long n = root_inner(a, a);
    int comp_max = 0;
    auto comps = components();
    for (const auto& c : comps) {
        bool hit = false;
        for (int i : c) hit = hit || a[i] != 0;
        if (!hit) continue;
        for (int i : c) comp_max = std::max(comp_max, d_[i]);
    }
    return n == 2LL * comp_max;
}

Weight RootSystem::root_to_weight(const RootVector& a) const {
    Weight w(rank(), 0);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * a[j];
    return w;
}

Weight RootSystem::reflect(const Weight& mu, int i) const {
    Weight w = mu;
    const int k = mu[i];
    for (int r = 0; r < rank(); ++r) w[r] -= k * cartan_[r][i];
    return w;
}

Weight RootSystem::dominant_representative(const Weight& mu) const {
    Weight w = mu;
    for (;;) {
        int i = 0;
        while (i < rank() && w[i] >= 0) ++i;
        if (i == rank()) return w;
        w = reflect(w, i);
    }
}

Weight RootSystem::w0(const Weight& mu) const {
    // w0 is linear; -w0(omega_i) is the dominant element in the orbit of -omega_i.
    Weight out(rank(), 0);
    for (int i = 0; i < rank(); ++i) {
        if (!mu[i]) continue;
        Weight neg(rank(), 0);
        neg[i] = -1;
        Weight dom = dominant_representative(neg);
        for (int r = 0; r < rank(); ++r) out[r] -= mu[i] * dom[r];
    }
    return out;
}

std::vector<Rational> RootSystem::expand_over_simple_roots(const Weight& mu) const {
    return solve_simple(cartan_, mu);
}

std::vector<std::vector<int>> RootSystem::components() const {
    std::vector<std::vector<int>> out;
    std::vector<int> seen(rank(), 0);
    for (int s = 0; s < rank(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t k = 0; k < comp.size(); ++k)
            for (int j = 0; j < rank(); ++j)
                if (!seen[j] && cartan_[comp[k]][j] != 0) {
                    seen[j] = 1;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

std::vector<std::pair<char, int>> RootSystem::component_types() const {
    std::vector<std::pair<char, int>> out;
    for (const auto& comp : components()) {
        const int n = static_cast<int>(comp.size());
        bool multiple = false, branch = false;
        int short_count = 0, dmax = 0;
        for (int i : comp) dmax = std::max(dmax, d_[i]);
        for (int i : comp) {
            int deg = 0;
            for (int j : comp)
                if (j != i && cartan_[i][j] != 0) {
                    ++deg;
                    if (cartan_[i][j] * cartan_[j][i] > 1) multiple = true;
                }
            if (deg >= 3) branch = true;
            if (d_[i] < dmax) ++short_count;
        }
        if (multiple && n == 2) out.emplace_back('C', 2);  // B2 = C2
        else if (multiple) out.emplace_back(short_count == 1 ? 'B' : 'C', n);
        else if (branch) out.emplace_back('D', n);
        else out.emplace_back('A', n);
    }
    return out;
}

BigInt RootSystem::weyl_group_order() const {
    BigInt total = 1;
    for (auto [t, n] : component_types()) {
        BigInt f = 1;
        for (int k = 2; k <= n; ++k) f *= k;
        switch (t) {
        case 'A': total *= f * (n + 1); break;
        case 'B':
        case 'C': total *= f * (BigInt(1) << n); break;
        case 'D': total *= f * (BigInt(1) << (n - 1)); break;
        default: throw Error("InvalidRank", "unsupported component type");
        }
    }
    return total;
}

int pairing(const Weight& lambda, int coroot_index) {
    if (coroot_index < 1 || coroot_index > static_cast<int>(lambda.size()))
        throw Error("InvalidRank", "coroot index out of range");
    return lambda[coroot_index - 1];
}

Weight w0_image(const FamilyRank& fr, const Weight& lambda) {
    const int l = fr.rank;
    Weight out(l);
    switch (fr.family) {
    case Family::A:
        for (int r = 0; r < l; ++r) out[l - 1 - r] = -lambda[r];
        break;
    case Family::B:
    case Family::C:
        for (int r = 0; r < l; ++r) out[r] = -lambda[r];
        break;
    case Family::D:
        for (int r = 0; r < l; ++r) out[r] = -lambda[r];
        if (l % 2 == 1) std::swap(out[l - 2], out[l - 1]);
        break;
    }
    return out;
}

std::vector<Rational> expand_over_simple_roots(const FamilyRank& fr, const Weight& lambda) {
    return solve_simple(classical_cartan(fr), lambda);
}

bool is_dominant(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

bool is_restricted(const Weight& w, int p) {
    if (!is_dominant(w)) return false;
    if (p == 0) return true;
    return std::all_of(w.begin(), w.end(), [p](int x) { return x < p; });
}

int natural_coords(const FamilyRank& fr) { return fr.family == Family::A ? fr.rank + 1 : fr.rank; }

std::vector<int> weight_to_epsilon2(const FamilyRank& fr, const Weight& w) {
    const int l = fr.rank, n = natural_coords(fr);
    std::vector<int> x(n, 0);
    auto add_prefix = [&](int upto, int amount) {
        for (int k = 0; k < upto; ++k) x[k] += amount;
    };
    for (int i = 0; i < l; ++i) {
        const int d = w[i];
        if (!d) continue;
        const int idx = i + 1;
        if (fr.family == Family::B && idx == l) {
            add_prefix(l, d);
        } else if (fr.family == Family::D && idx == l) {
            add_prefix(l, d);
        } else if (fr.family == Family::D && idx == l - 1) {
            add_prefix(l - 1, d);
            x[l - 1] -= d;
        } else {
            add_prefix(idx, 2 * d);
        }
    }
    return x;
}

Weight epsilon2_to_weight(const FamilyRank& fr, const std::vector<int>& x2) {
    // coroot pairings, computed on doubled coordinates and halved at the end
    const int l = fr.rank;
    Weight w(l);
    for (int i = 0; i + 1 < l; ++i) w[i] = x2[i] - x2[i + 1];
    switch (fr.family) {
    case Family::A: w[l - 1] = x2[l - 1] - x2[l]; break;
    case Family::B: w[l - 1] = 2 * x2[l - 1]; break;
    case Family::C: w[l - 1] = x2[l - 1]; break;
    case Family::D: w[l - 1] = x2[l - 2] + x2[l - 1]; break;
    }
    for (int& v : w) {
        if (v % 2 != 0) throw Error("MalformedCharacter", "coordinates not in the weight lattice");
        v /= 2;
    }
    return w;
}

Weight epsilon_to_weight(const FamilyRank& fr, const std::vector<int>& x) {
    std::vector<int> x2(x.size());
    for (size_t k = 0; k < x.size(); ++k) x2[k] = 2 * x[k];
    return epsilon2_to_weight(fr, x2);
}

std::vector<std::vector<int>> simple_roots_epsilon(const FamilyRank& fr) {
    const int l = fr.rank, n = natural_coords(fr);
    std::vector<std::vector<int>> out;
    for (int i = 0; i + 1 < l; ++i) {
        std::vector<int> a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        out.push_back(a);
    }
    std::vector<int> a(n, 0);
    switch (fr.family) {
    case Family::A: a[l - 1] = 1; a[l] = -1; break;
    case Family::B: a[l - 1] = 1; break;
    case Family::C: a[l - 1] = 2; break;
    case Family::D: a[l - 2] = 1; a[l - 1] = 1; break;
    }
    out.push_back(a);
    return out;
}

} // namespace nu
