#include "doctest.h"

#include "nu/irreducible.hpp"
#include "nu/semisimple.hpp"

#include <algorithm>
#include <functional>

using namespace nu;

namespace {

Weight fw(int l, int i, int c = 1) {
    Weight w(l, 0);
    w[i - 1] = c;
    return w;
}

TorusClass torus(Family f, int l, long long M, std::vector<long long> t) {
    return TorusClass{FamilyRank{f, l}, M, std::move(t)};
}

Character natural(const FamilyRank& fr) { return freudenthal_character(fr, fw(fr.rank, 1)); }

long long largest(const std::map<long long, long long>& ms) {
    long long best = 0;
    for (const auto& [k, m] : ms) best = std::max(best, m);
    return best;
}

long long total(const std::map<long long, long long>& ms) {
    long long s = 0;
    for (const auto& [k, m] : ms) s += m;
    return s;
}

} // namespace

TEST_CASE("weights evaluated on torus elements") {
    // diag(d,d,d,d^-3) with d = zeta_16: omega_1 gives d
    auto s = torus(Family::A, 3, 16, {1, 1, 1, 13});
    CHECK(evaluate_weight(s, fw(3, 1)) == 2);  // zeta_32^2 = zeta_16
    CHECK(evaluate_weight(s, Weight(3, 0)) == 0);

    // C2, diag(zeta_4, zeta_4^3, ...): epsilon_1 + epsilon_2 evaluates to 1
    auto c = torus(Family::C, 2, 4, {1, 3});
    CHECK(evaluate_weight(c, fw(2, 2)) == 0);
}

TEST_CASE("eigenvalue multisets") {
    auto s = torus(Family::A, 3, 16, {1, 1, 1, 13});
    auto ms = eigen_multiset(wedge(2, natural({Family::A, 3})), s);
    CHECK(ms.size() == 2);
    CHECK(ms[4] == 3);   // d^2
    CHECK(ms[28] == 3);  // d^-2

    // -I on S^2 of the natural module of C2
    auto minus = torus(Family::C, 2, 2, {1, 1});
    CHECK(is_central(minus));
    auto sym2 = eigen_multiset(sym(2, natural({Family::C, 2})), minus);
    CHECK(sym2.size() == 1);
    CHECK(sym2.begin()->second == 10);

    // B3, diag(-1,-1,-1,1,-1,-1,-1) on the exterior square
    auto b = torus(Family::B, 3, 2, {1, 1, 1});
    auto wb = eigen_multiset(wedge(2, natural({Family::B, 3})), b);
    CHECK(wb.size() == 2);
    CHECK(wb[0] == 15);
    CHECK(wb[2] == 6);
}

TEST_CASE("centrality") {
    CHECK(is_central(torus(Family::A, 3, 4, {1, 1, 1, 1})));
    CHECK_FALSE(is_central(torus(Family::A, 3, 16, {1, 1, 1, 13})));
    CHECK_FALSE(is_central(torus(Family::C, 2, 4, {1, 3})));
    CHECK(is_central(torus(Family::D, 4, 2, {1, 1, 1, 1})));
    CHECK_FALSE(is_central(torus(Family::D, 4, 2, {1, 1, 1, 0})));
    // B: the spin lift of -I on the natural module is not central in SO
    CHECK_FALSE(is_central(torus(Family::B, 3, 2, {1, 1, 0})));
}

TEST_CASE("root values reproduce the torus element") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int l = (f == Family::D ? 4 : 2); l <= 5; ++l) {
            FamilyRank fr{f, l};
            auto simple = simple_roots_epsilon(fr);
            for (long long r : {3, 5, 7})
                for (int seed = 1; seed <= 10; ++seed) {
                    std::vector<long long> a(l);
                    for (int j = 0; j < l; ++j) a[j] = (seed * (j + 3) + j * j) % r;
                    auto s = TorusClass::from_root_values(fr, r, a);
                    for (int j = 0; j < l; ++j) {
                        long long v = 0;
                        for (size_t k = 0; k < simple[j].size(); ++k) v += 2 * simple[j][k] * s.t[k];
                        // alpha_j(s) = zeta_{2M}^v must equal zeta_r^{a_j}
                        long long want = a[j] * (2 * s.M / r);
                        CHECK(((v - want) % (2 * s.M) + 2 * s.M) % (2 * s.M) == 0);
                    }
                    if (f == Family::A) {
                        long long sum = 0;
                        for (auto x : s.t) sum += x;
                        CHECK(sum % s.M == 0);
                    }
                }
        }
}

TEST_CASE("central torus scalars on levels") {
    for (int l = 3; l <= 7; ++l) {
        ModuleSpec spec{{Family::A, l}, fw(l, 3), 0};
        for (int j = 0; j <= 3; ++j) CHECK(central_level_scalar(spec, 1, j) == l - 2 - j * (l + 1));
    }
    for (int l = 2; l <= 6; ++l) {
        Weight w(l, 0);
        w[0] = w[1] = 1;
        ModuleSpec spec{{Family::C, l}, w, 3};
        for (int j = 0; j <= 4; ++j) CHECK(central_level_scalar(spec, 1, j) == 2 - j);
    }
    // affine in j
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int i = 1; i <= 4; ++i) {
            ModuleSpec spec{{f, 4}, Weight{1, 0, 1, 1}, 0};
            long long step = central_level_scalar(spec, i, 1) - central_level_scalar(spec, i, 0);
            CHECK(step < 0);
            for (int j = 1; j <= 5; ++j)
                CHECK(central_level_scalar(spec, i, j + 1) - central_level_scalar(spec, i, j) == step);
        }
}

TEST_CASE("eigen multisets sum to the dimension and are inversion symmetric") {
    struct Case {
        Family f;
        int l;
        Weight w;
    };
    std::vector<Case> cases = {
        {Family::A, 3, {1, 0, 1}}, {Family::B, 3, {0, 1, 0}}, {Family::C, 3, {0, 0, 1}},
        {Family::D, 4, {0, 1, 0, 0}}, {Family::B, 3, {0, 0, 1}}, {Family::D, 4, {0, 0, 0, 1}},
    };
    for (const auto& c : cases) {
        FamilyRank fr{c.f, c.l};
        auto ch = freudenthal_character(fr, c.w);
        Weight neg = c.w;
        for (int& x : neg) x = -x;
        bool self_dual = w0_image(fr, c.w) == neg;
        for (long long r : {3, 5, 7, 11})
            for (int seed = 0; seed < 6; ++seed) {
                std::vector<long long> a(c.l);
                for (int j = 0; j < c.l; ++j) a[j] = (seed + 2 * j * j + j) % r;
                auto s = TorusClass::from_root_values(fr, r, a);
                auto ms = eigen_multiset(ch, s);
                CHECK(total(ms) == ch.dim());
                if (self_dual)
                    for (const auto& [k, m] : ms) {
                        long long inv = (2 * s.M - k) % (2 * s.M);
                        CHECK(ms.count(inv));
                        if (ms.count(inv)) CHECK(ms.at(inv) == m);
                    }
                // scaling by a central element keeps the multiplicities
                if (c.f == Family::C || c.f == Family::D) {
                    auto z = s;
                    for (auto& x : z.t) x = (x + s.M / 2 * (s.M % 2 == 0)) % s.M;
                    if (s.M % 2 == 0) {
                        std::vector<long long> m1, m2;
                        for (const auto& [k, m] : ms) m1.push_back(m);
                        for (const auto& [k, m] : eigen_multiset(ch, z)) m2.push_back(m);
                        std::sort(m1.begin(), m1.end());
                        std::sort(m2.begin(), m2.end());
                        CHECK(m1 == m2);
                    }
                }
            }
    }
}

TEST_CASE("semisimple maxima on small modules") {
    auto a4 = max_eigenspace_semisimple({{Family::A, 4}, fw(4, 2), 0});
    CHECK(a4.value == 6);
    CHECK_FALSE(is_central(a4.witness));

    auto a3 = max_eigenspace_semisimple({{Family::A, 3}, fw(3, 2), 0});
    CHECK(a3.value == 4);
    auto a3w = max_eigenspace_semisimple({{Family::A, 3}, fw(3, 2), 0}, SearchConfig{0, 0, true});
    CHECK(a3w.value == 4);
    CHECK(a3w.origin.rfind("witness:", 0) == 0);

    auto c3 = max_eigenspace_semisimple({{Family::C, 3}, fw(3, 3), 2});
    CHECK(c3.value == 4);

    // the reported witness really attains the value
    auto attained = [](const SemisimpleMax& res, const Weight& w, int p) {
        auto irr = Irreducible::get(res.witness.fr, w, p);
        return eigen_multiset(irr->character(), res.witness)[res.eigen_exponent];
    };
    CHECK(attained(a4, fw(4, 2), 0) == 6);
    CHECK(attained(a3, fw(3, 2), 0) == 4);
    CHECK(attained(a3w, fw(3, 2), 0) == 4);
    CHECK(attained(c3, fw(3, 3), 2) == 4);
}

TEST_CASE("witness values never exceed the sweep") {
    std::vector<ModuleSpec> specs = {
        {{Family::A, 3}, fw(3, 1), 0}, {{Family::A, 4}, fw(4, 2), 5}, {{Family::A, 3}, fw(3, 1, 2), 3},
        {{Family::C, 2}, fw(2, 2), 2}, {{Family::C, 2}, fw(2, 2), 3}, {{Family::C, 3}, fw(3, 2), 0},
        {{Family::C, 4}, fw(4, 2), 2}, {{Family::C, 4}, fw(4, 2), 5}, {{Family::C, 3}, fw(3, 1, 2), 5},
        {{Family::B, 3}, fw(3, 3), 3}, {{Family::B, 3}, fw(3, 2), 0}, {{Family::D, 4}, fw(4, 2), 2},
    };
    for (const auto& spec : specs) {
        auto w = max_eigenspace_semisimple(spec, SearchConfig{0, 0, true});
        auto s = max_eigenspace_semisimple(spec, SearchConfig{0, 0, false});
        CAPTURE(to_string(spec.fr));
        CAPTURE(weight_to_string(spec.highest));
        CHECK(w.value <= s.value);
    }
}

TEST_CASE("sweep agrees with exhaustive search over small tori") {
    // every t in (Z/N)^n for N = 12 (type A) or 24 (others), non-central
    std::vector<ModuleSpec> specs = {
        {{Family::A, 2}, fw(2, 1, 2), 0}, {{Family::A, 2}, Weight{1, 1}, 0}, {{Family::A, 3}, fw(3, 2), 0},
        {{Family::C, 2}, fw(2, 2), 0}, {{Family::C, 2}, fw(2, 1, 2), 0}, {{Family::B, 3}, fw(3, 2), 0}, {{Family::D, 4}, fw(4, 1), 0},
    };
    for (const auto& spec : specs) {
        const auto& fr = spec.fr;
        auto ch = freudenthal_character(fr, spec.highest);
        long long N = fr.family == Family::A ? 12 : 24;
        int n = natural_coords(fr);
        long long brute = 0;
        std::vector<long long> t(n, 0);
        std::function<void(int)> rec = [&](int k) {
            if (k == n) {
                TorusClass s{fr, N, t};
                if (fr.family == Family::A) {
                    long long sum = 0;
                    for (auto x : t) sum += x;
                    if (sum % N) return;
                }
                if (is_central(s)) return;
                brute = std::max(brute, largest(eigen_multiset(ch, s)));
                return;
            }
            for (long long v = 0; v < N; ++v) {
                t[k] = v;
                rec(k + 1);
            }
        };
        rec(0);
        // orders dividing N reduce to primes 2 and 3
        auto small = max_eigenspace_on_character(spec, ch, SearchConfig{3, 0, false});
        auto swept = max_eigenspace_on_character(spec, ch);
        CAPTURE(to_string(fr));
        CAPTURE(weight_to_string(spec.highest));
        CHECK(small.value == brute);
        CHECK(swept.value >= brute);
    }
}

TEST_CASE("witness catalog parses") {
    const auto& ws = standard_witnesses();
    CHECK(ws.size() > 10);
    for (const auto& w : ws)
        for (int l = std::max(w.ranks.lo, 2); l <= w.ranks.lo + 3; ++l)
            if (w.ranks.contains(l)) CHECK_NOTHROW(w.instantiate(l, 0));
}
