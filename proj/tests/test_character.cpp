#include "doctest.h"

#include "nu/character.hpp"

#include <map>

using namespace nu;

namespace {

// Independent check of Freudenthal: ch(lambda) * sum_w sgn(w) e^{w rho}
// must equal sum_w sgn(w) e^{w(lambda+rho)}. The Weyl group is enumerated
// through the orbit of the regular weight rho, tracking lambda+rho alongside.
bool weyl_quotient_holds(const RootSystem& rs, const Character& ch, const Weight& lambda) {
    const int n = rs.rank();
    Weight rho(n, 1), lr = lambda;
    for (int& v : lr) v += 1;
    std::map<Weight, std::pair<Weight, int>> elems;  // w(rho) -> (w(lambda+rho), sign)
    std::vector<Weight> frontier{rho};
    elems[rho] = {lr, 1};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& r : frontier) {
            auto [l, s] = elems[r];
            for (int i = 0; i < n; ++i) {
                Weight r2 = rs.reflect(r, i);
                if (elems.count(r2)) continue;
                elems[r2] = {rs.reflect(l, i), -s};
                next.push_back(r2);
            }
        }
        frontier = next;
    }
    std::map<Weight, long long> lhs, rhs;
    for (const auto& [wr, ls] : elems) {
        rhs[ls.first] += ls.second;
        for (const auto& [mu, m] : ch.mult) {
            Weight v = mu;
            for (int i = 0; i < n; ++i) v[i] += wr[i];
            lhs[v] += m * ls.second;
        }
    }
    auto clean = [](std::map<Weight, long long>& m) {
        for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
    };
    clean(lhs);
    clean(rhs);
    return lhs == rhs;
}

} // namespace

TEST_CASE("Weyl dimension examples") {
    CHECK(weyl_dim({Family::A, 3}, {0, 1, 0}) == 6);
    CHECK(weyl_dim({Family::C, 3}, {0, 0, 1}) == 14);
    CHECK(weyl_dim({Family::B, 3}, {1, 0, 0}) == 7);
    CHECK(weyl_dim({Family::B, 3}, {0, 0, 1}) == 8);
    CHECK(weyl_dim({Family::D, 5}, {0, 0, 0, 0, 1}) == 16);
    CHECK(weyl_dim({Family::C, 3}, {1, 0, 1}) == 70);
    CHECK(weyl_dim({Family::D, 6}, {0, 0, 0, 0, 1, 1}) == 792);
    CHECK_THROWS_AS(weyl_dim({Family::A, 2}, {1, -1}), Error);
}

TEST_CASE("Freudenthal small examples") {
    auto a2 = freudenthal_character({Family::A, 2}, {1, 1});
    CHECK(a2.dim() == 8);
    CHECK(a2.at({0, 0}) == 2);
    CHECK(a2.mult.size() == 7);
    auto c2 = freudenthal_character({Family::C, 2}, {0, 1});
    CHECK(c2.dim() == 5);
    CHECK(c2.at({0, 0}) == 1);
    auto triv = freudenthal_character({Family::D, 4}, {0, 0, 0, 0});
    CHECK(triv.dim() == 1);
    CHECK(triv.at({0, 0, 0, 0}) == 1);
}

TEST_CASE("Freudenthal agrees with the Weyl character quotient") {
    struct Case { FamilyRank fr; Weight w; };
    std::vector<Case> cases = {
        {{Family::A, 2}, {1, 1}}, {{Family::A, 3}, {2, 0, 1}}, {{Family::C, 2}, {1, 1}},
        {{Family::C, 2}, {0, 2}}, {{Family::B, 3}, {0, 1, 1}}, {{Family::C, 3}, {1, 0, 1}},
        {{Family::D, 4}, {1, 0, 0, 1}}, {{Family::B, 4}, {0, 0, 0, 2}}, {{Family::A, 4}, {1, 1, 0, 0}},
    };
    for (const auto& c : cases) {
        auto rs = RootSystem::build(c.fr);
        auto ch = freudenthal_character(rs, c.w);
        CHECK(weyl_quotient_holds(rs, ch, c.w));
        CHECK(BigInt(ch.dim()) == weyl_dim(rs, c.w));
    }
}

TEST_CASE("Freudenthal characters are Weyl invariant") {
    for (auto [fr, w] : std::vector<std::pair<FamilyRank, Weight>>{
             {{Family::B, 3}, {1, 0, 1}}, {{Family::D, 5}, {1, 0, 0, 0, 1}}, {{Family::C, 4}, {0, 1, 0, 0}}}) {
        auto rs = RootSystem::build(fr);
        auto ch = freudenthal_character(rs, w);
        for (int i = 0; i < rs.rank(); ++i)
            for (const auto& [mu, m] : ch.mult) CHECK(ch.at(rs.reflect(mu, i)) == m);
    }
}

TEST_CASE("plethysm functors") {
    auto nat = freudenthal_character({Family::A, 3}, {1, 0, 0});
    auto w2 = wedge(2, nat);
    CHECK(w2 == freudenthal_character({Family::A, 3}, {0, 1, 0}));
    auto a1 = freudenthal_character({Family::A, 1}, {1});
    auto s2 = sym(2, a1);
    CHECK(s2.dim() == 3);
    CHECK(s2.at({2}) == 1);
    CHECK(s2.at({0}) == 1);
    CHECK(s2.at({-2}) == 1);

    auto w = freudenthal_character({Family::A, 2}, {1, 0});
    auto wd = freudenthal_character({Family::A, 2}, {0, 1});
    auto t = tensor(w, wd);
    CHECK(t.dim() == 9);
    CHECK(t.at({0, 0}) == 3);

    // wedge^2 + sym^2 = tensor square on natural modules
    for (auto fr : {FamilyRank{Family::A, 5}, FamilyRank{Family::B, 4}, FamilyRank{Family::C, 6}, FamilyRank{Family::D, 6}}) {
        Weight w1(fr.rank, 0);
        w1[0] = 1;
        auto v = freudenthal_character(fr, w1);
        CHECK(direct_sum(wedge(2, v), sym(2, v)) == tensor(v, v));
        CHECK(wedge(3, v).dim() == v.dim() * (v.dim() - 1) * (v.dim() - 2) / 6);
        CHECK(sym(3, v).dim() == v.dim() * (v.dim() + 1) * (v.dim() + 2) / 6);
    }

    auto b = freudenthal_character({Family::B, 3}, {1, 0, 0});
    CHECK_THROWS_AS(tensor(b, w), Error);
}

TEST_CASE("subdominant weights") {
    FamilyRank a6{Family::A, 6};
    auto s = subdominant_weights(a6, {3, 0, 0, 0, 0, 0});
    REQUIRE(s.size() == 3);
    CHECK(s[0] == Weight{3, 0, 0, 0, 0, 0});
    CHECK(s[1] == Weight{1, 1, 0, 0, 0, 0});
    CHECK(s[2] == Weight{0, 0, 1, 0, 0, 0});
    auto t = subdominant_weights(a6, {1, 1, 0, 0, 0, 0});
    CHECK(t.size() == 2);
    CHECK(subdominant_weights({Family::C, 3}, {0, 0, 0}).size() == 1);

    // every dominant weight of the Freudenthal character is found
    for (auto [fr, w] : std::vector<std::pair<FamilyRank, Weight>>{
             {{Family::B, 4}, {1, 1, 0, 0}}, {{Family::D, 5}, {0, 0, 0, 1, 1}}, {{Family::C, 4}, {1, 0, 1, 0}}}) {
        auto rs = RootSystem::build(fr);
        auto ch = freudenthal_character(rs, w);
        size_t dominant = 0;
        for (const auto& [mu, m] : ch.mult) dominant += is_dominant(mu);
        CHECK(subdominant_weights(rs, w).size() == dominant);
    }
}

TEST_CASE("lowest alcove") {
    auto a2 = RootSystem::build({Family::A, 2});
    // adjoint module of SL3 is reducible at p = 3 only
    CHECK_FALSE(in_lowest_alcove(a2, {1, 1}, 3));
    CHECK(in_lowest_alcove(a2, {1, 1}, 5));
    CHECK(in_lowest_alcove(a2, {1, 0}, 3));
    CHECK(in_lowest_alcove(a2, {5, 5}, 0));
}
