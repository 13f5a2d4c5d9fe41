#include "nu/character.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace nu {

long long Character::dim() const {
    long long s = 0;
    for (const auto& [w, m] : mult) s += m;
    return s;
}

long long Character::at(const Weight& w) const {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
}

std::string ambient_name(const RootSystem& rs) {
    if (rs.family_rank()) return to_string(*rs.family_rank());
    std::string s = "cartan[";
    for (const auto& row : rs.cartan_matrix()) {
        for (int v : row) s += std::to_string(v) + " ";
        s += ";";
    }
    return s + "]";
}

namespace {

void require_dominant(const Weight& lambda, int rank) {
    if (static_cast<int>(lambda.size()) != rank)
        throw Error("NotDominant", "weight has " + std::to_string(lambda.size()) + " coordinates, rank is " +
                                       std::to_string(rank));
    if (!is_dominant(lambda)) throw Error("NotDominant", "weight " + weight_to_string(lambda) + " is not dominant");
}

} // namespace

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
    require_dominant(lambda, rs.rank());
    Weight lr = lambda;
    for (int& v : lr) v += 1;
    Weight rho(rs.rank(), 1);
    Rational q = 1;
    for (const auto& a : rs.positive_roots()) q *= Rational(rs.weight_inner(lr, a), rs.weight_inner(rho, a));
    if (denominator(q) != 1) throw Error("Mismatch", "non-integral Weyl dimension");
    return numerator(q);
}

BigInt weyl_dim(const FamilyRank& fr, const Weight& lambda) { return weyl_dim(RootSystem::build(fr), lambda); }

Character freudenthal_character(const RootSystem& rs, const Weight& lambda) {
    require_dominant(lambda, rs.rank());
    const int n = rs.rank();

    // weights by simple-root strings; depth[w] = lambda - w over simple roots
    std::map<Weight, RootVector> depth;
    std::deque<Weight> queue{lambda};
    depth[lambda] = RootVector(n, 0);
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        const RootVector c = depth[w];
        for (int i = 0; i < n; ++i) {
            for (int k = 1; k <= w[i]; ++k) {
                Weight v = w;
                for (int r = 0; r < n; ++r) v[r] -= k * rs.cartan(r, i);
                if (depth.count(v)) continue;
                RootVector cv = c;
                cv[i] += k;
                depth[v] = cv;
                queue.push_back(v);
            }
        }
    }

    std::vector<std::pair<int, Weight>> order;
    for (const auto& [w, c] : depth) order.emplace_back(std::accumulate(c.begin(), c.end(), 0), w);
    std::sort(order.begin(), order.end());

    std::vector<Weight> root_weights;
    for (const auto& a : rs.positive_roots()) root_weights.push_back(rs.root_to_weight(a));

    Character ch;
    ch.ambient = ambient_name(rs);
    Weight lr = lambda;
    for (int& v : lr) v += 1;
    for (const auto& [h, mu] : order) {
        if (h == 0) {
            ch.mult[mu] = 1;
            continue;
        }
        const RootVector& g = depth[mu];
        // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = 2(lambda+rho, g) - (g, g)
        long long den = 2 * rs.weight_inner(lr, g) - rs.root_inner(g, g);
        long long num = 0;
        for (size_t a = 0; a < root_weights.size(); ++a) {
            Weight v = mu;
            for (;;) {
                for (int r = 0; r < n; ++r) v[r] += root_weights[a][r];
                auto it = ch.mult.find(v);
                if (it == ch.mult.end()) break;
                num += it->second * rs.weight_inner(v, rs.positive_roots()[a]);
            }
        }
        num *= 2;
        if (den <= 0 || num % den != 0) throw Error("Mismatch", "Freudenthal recursion is not integral");
        long long m = num / den;
        if (m > 0) ch.mult[mu] = m;
    }
    return ch;
}

Character freudenthal_character(const FamilyRank& fr, const Weight& lambda) {
    return freudenthal_character(RootSystem::build(fr), lambda);
}

namespace {

using Signed = std::map<Weight, long long>;

void check_same(const Character& a, const Character& b) {
    if (a.ambient != b.ambient) throw Error("Mismatch", "characters of " + a.ambient + " and " + b.ambient);
}

Signed convolve(const Signed& a, const Signed& b) {
    Signed out;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) {
            Weight w = wa;
            for (size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
            out[w] += ma * mb;
        }
    return out;
}

Signed adams(const Signed& a, int k) {
    Signed out;
    for (const auto& [w, m] : a) {
        Weight v = w;
        for (int& x : v) x *= k;
        out[v] += m;
    }
    return out;
}

void add_into(Signed& acc, const Signed& x, long long f) {
    for (const auto& [w, m] : x) acc[w] += f * m;
}

// Newton identities: k e_k = sum_i (-1)^{i-1} e_{k-i} p_i and
// k h_k = sum_i h_{k-i} p_i.
Character power(int k, const Character& a, bool alternating) {
    if (k < 0) throw Error("Mismatch", "negative exterior/symmetric power");
    std::vector<Signed> e(k + 1);
    Weight zero(a.mult.empty() ? 0 : a.mult.begin()->first.size(), 0);
    e[0][zero] = 1;
    Signed base(a.mult.begin(), a.mult.end());
    for (int j = 1; j <= k; ++j) {
        Signed acc;
        for (int i = 1; i <= j; ++i) {
            long long sign = (alternating && (i % 2 == 0)) ? -1 : 1;
            add_into(acc, convolve(e[j - i], adams(base, i)), sign);
        }
        Signed res;
        for (const auto& [w, m] : acc) {
            if (m % j != 0) throw Error("Mismatch", "plethysm not integral");
            if (m != 0) res[w] = m / j;
        }
        e[j] = std::move(res);
    }
    Character out;
    out.ambient = a.ambient;
    for (const auto& [w, m] : e[k]) {
        if (m < 0) throw Error("Mismatch", "negative plethysm multiplicity");
        if (m > 0) out.mult[w] = m;
    }
    return out;
}

} // namespace

Character tensor(const Character& a, const Character& b) {
    check_same(a, b);
    Character out;
    out.ambient = a.ambient;
    Signed s = convolve(Signed(a.mult.begin(), a.mult.end()), Signed(b.mult.begin(), b.mult.end()));
    out.mult.insert(s.begin(), s.end());
    return out;
}

Character wedge(int k, const Character& a) { return power(k, a, true); }
Character sym(int k, const Character& a) { return power(k, a, false); }

Character direct_sum(const Character& a, const Character& b) {
    check_same(a, b);
    Character out = a;
    for (const auto& [w, m] : b.mult) out.mult[w] += m;
    return out;
}

Character subtract(const Character& a, const Character& b, long long k) {
    check_same(a, b);
    Character out = a;
    for (const auto& [w, m] : b.mult) {
        long long v = out.at(w) - k * m;
        if (v < 0) throw Error("Mismatch", "subtraction leaves negative multiplicity at " + weight_to_string(w));
        if (v == 0) out.mult.erase(w);
        else out.mult[w] = v;
    }
    return out;
}

Character frobenius_twist(const Character& a, int q) {
    Character out;
    out.ambient = a.ambient;
    for (const auto& [w, m] : a.mult) {
        Weight v = w;
        for (int& x : v) x *= q;
        out.mult[v] += m;
    }
    return out;
}

Character orbit_character(const RootSystem& rs, const Weight& lambda) {
    Character out;
    out.ambient = ambient_name(rs);
    std::deque<Weight> q{lambda};
    out.mult[lambda] = 1;
    while (!q.empty()) {
        Weight w = q.front();
        q.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            Weight v = rs.reflect(w, i);
            if (out.mult.emplace(v, 1).second) q.push_back(v);
        }
    }
    return out;
}

std::optional<RootVector> root_cone_difference(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    Weight diff(lambda.size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = lambda[i] - mu[i];
    auto c = rs.expand_over_simple_roots(diff);
    RootVector out;
    for (const auto& x : c) {
        if (denominator(x) != 1 || x < 0) return std::nullopt;
        out.push_back(static_cast<int>(numerator(x)));
    }
    return out;
}

std::vector<Weight> subdominant_weights(const RootSystem& rs, const Weight& lambda) {
    require_dominant(lambda, rs.rank());
    // dominant weights of L(lambda) in characteristic zero are exactly the
    // dominant weights below lambda; collect them through the simple-root
    // string closure restricted to dominant representatives
    std::set<Weight> seen{lambda};
    std::deque<Weight> q{lambda};
    std::vector<Weight> roots;
    for (const auto& a : rs.positive_roots()) roots.push_back(rs.root_to_weight(a));
    while (!q.empty()) {
        Weight w = q.front();
        q.pop_front();
        for (const auto& a : roots) {
            Weight v = w;
            for (size_t i = 0; i < v.size(); ++i) v[i] -= a[i];
            if (!is_dominant(v) || seen.count(v)) continue;
            seen.insert(v);
            q.push_back(v);
        }
    }
    std::vector<std::pair<Rational, Weight>> order;
    for (const auto& w : seen) {
        auto c = rs.expand_over_simple_roots(w);
        auto l = rs.expand_over_simple_roots(lambda);
        Rational h = 0;
        for (size_t i = 0; i < c.size(); ++i) h += l[i] - c[i];
        order.emplace_back(h, w);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    std::vector<Weight> out;
    for (auto& [h, w] : order) out.push_back(w);
    return out;
}

std::vector<Weight> subdominant_weights(const FamilyRank& fr, const Weight& lambda) {
    return subdominant_weights(RootSystem::build(fr), lambda);
}

bool in_lowest_alcove(const RootSystem& rs, const Weight& lambda, int p) {
    if (p == 0) return true;
    Weight lr = lambda;
    for (int& v : lr) v += 1;
    for (const auto& a : rs.positive_roots())
        if (rs.coroot_pairing(lr, a) > p) return false;
    return true;
}

} // namespace nu
