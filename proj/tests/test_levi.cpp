#include "doctest.h"

#include "nu/catalog.hpp"
#include "nu/irreducible.hpp"
#include "nu/levi.hpp"

using namespace nu;

namespace {

Weight W(std::initializer_list<int> xs) { return Weight(xs); }

Weight fw(int l, int i, int c = 1) {
    Weight w(l, 0);
    w[i - 1] = c;
    return w;
}

std::vector<long long> level_dims(const LevelDecomposition& d) {
    std::vector<long long> out;
    for (const auto& c : d.levels) out.push_back(c.dim());
    return out;
}

} // namespace

TEST_CASE("maximal levels") {
    CHECK(max_level({{Family::A, 4}, W({1, 1, 0, 0}), 0}, 1) == 2);
    for (int l = 2; l <= 6; ++l) {
        Weight w(l, 0);
        w[0] = w[1] = 1;
        CHECK(max_level({{Family::C, l}, w, 0}, l) == 3);
    }
    CHECK(max_level({{Family::B, 4}, fw(4, 1, 3), 0}, 1) == 6);

    // closed forms against w0, every small dominant weight up to rank 10
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int l = 1; l <= 10; ++l) {
            try {
                validate({f, l});
            } catch (const Error&) {
                continue;
            }
            for (int a = 1; a <= l; ++a)
                for (int b = a; b <= l; ++b)
                    for (int c = 1; c <= 2; ++c) {
                        Weight w = fw(l, a, c);
                        w[b - 1] += 1;
                        ModuleSpec spec{{f, l}, w, 0};
                        CHECK(max_level(spec, 1) == max_level_closed_form(spec, 1));
                        if (f == Family::C) CHECK(max_level(spec, l) == max_level_closed_form(spec, l));
                    }
        }
}

TEST_CASE("level decompositions") {
    ModuleSpec a5{{Family::A, 5}, fw(5, 3), 0};
    auto d = level_decompose(a5, freudenthal_character(a5.fr, a5.highest), 1);
    CHECK(level_dims(d) == std::vector<long long>{10, 10});
    CHECK(decompose_level(d.levi, d.levels[0]) == LeviFactorList{{restrict_to_levi(fw(5, 3), 1), 1}});
    CHECK(decompose_level(d.levi, d.levels[1]) == LeviFactorList{{restrict_to_levi(fw(5, 4), 1), 1}});

    for (int p : {0, 3, 2}) {
        ModuleSpec c3{{Family::C, 3}, fw(3, 3), p};
        auto irr = Irreducible::get(c3.fr, c3.highest, p);
        auto dc = level_decompose(c3, irr->character(), 1);
        if (p == 2)
            CHECK(level_dims(dc) == std::vector<long long>{4, 0, 4});
        else
            CHECK(level_dims(dc) == std::vector<long long>{5, 4, 5});
        CHECK(check_level_duality(dc));
    }

    // e_i = 0: one level
    ModuleSpec a3{{Family::A, 3}, fw(3, 2), 0};
    auto z = level_decompose(a3, freudenthal_character(a3.fr, a3.highest), 1);
    CHECK(z.levels.size() == 2);
    ModuleSpec c2{{Family::C, 2}, W({0, 0}), 0};
    CHECK(level_decompose(c2, freudenthal_character(c2.fr, c2.highest), 2).levels.size() == 1);
}

TEST_CASE("level factor lists") {
    for (int l = 2; l <= 6; ++l) {
        ModuleSpec s{{Family::C, l}, fw(l, 1, 3), 0};
        auto d = level_decompose(s, freudenthal_character(s.fr, s.highest), 1);
        CHECK(d.levels.size() == 7);
        auto f = decompose_level(d.levi, d.levels[2]);
        REQUIRE(f.size() == 2);
        CHECK(levi_weight_to_string(f[0].first, 1) == "2w2");
        CHECK(levi_weight_to_string(f[1].first, 1) == "0");
    }
    // type A: the levels of S^3 are irreducible
    for (int l = 2; l <= 6; ++l) {
        ModuleSpec s{{Family::A, l}, fw(l, 1, 3), 0};
        auto d = level_decompose(s, freudenthal_character(s.fr, s.highest), 1);
        auto f = decompose_level(d.levi, d.levels[2]);
        REQUIRE(f.size() == 1);
        CHECK(levi_weight_to_string(f[0].first, 1) == "2w2");
    }
    for (int l = 3; l <= 6; ++l) {
        ModuleSpec s{{Family::C, l}, W({1, 1}), 0};
        s.highest.resize(l, 0);
        auto d = level_decompose(s, freudenthal_character(s.fr, s.highest), 1);
        std::vector<std::string> names;
        for (const auto& [w, m] : decompose_level(d.levi, d.levels[1])) {
            CHECK(m == 1);
            names.push_back(levi_weight_to_string(w, 1));
        }
        CHECK(names == std::vector<std::string>{"2w2", "w3", "0"});
    }
    ModuleSpec bad{{Family::A, 2}, W({1, 1}), 0};
    Character neg;
    neg.ambient = ambient_name(levi_root_system(bad.fr, 1));
    neg.mult[W({0})] = 1;
    neg.mult[W({2})] = 1;
    CHECK_THROWS_AS(decompose_level(levi_root_system(bad.fr, 1), neg), Error);
}

TEST_CASE("levels add up, resynthesise and are dual to each other") {
    int checked = 0;
    for (const auto& e : Catalog::standard().entries()) {
        for (int l = e.ranks.lo; l <= e.ranks.lo + 1; ++l) {
            if (!e.ranks.contains(l)) continue;
            auto w = e.weight.at(l);
            if (!w) continue;
            FamilyRank fr{e.family, l};
            if (weyl_dim(fr, *w) > 1500) continue;
            ModuleSpec spec{fr, *w, 0};
            auto ch = freudenthal_character(fr, *w);
            Weight neg = *w;
            for (int& x : neg) x = -x;
            const bool self_dual = w0_image(fr, *w) == neg;
            for (int i : {1, l}) {
                auto d = level_decompose(spec, ch, i);
                CHECK(d.dim() == ch.dim());
                for (const auto& level : d.levels)
                    CHECK(synthesize_level(d.levi, decompose_level(d.levi, level)) == level);
                if (self_dual)
                    CHECK(check_level_duality(d));
                else
                    CHECK_THROWS_AS(check_level_duality(d), Error);
                ++checked;
            }
        }
    }
    CHECK(checked > 40);

    ModuleSpec a4{{Family::A, 4}, fw(4, 1), 0};
    CHECK_THROWS_AS(check_level_duality(level_decompose(a4, freudenthal_character(a4.fr, a4.highest), 1)), Error);
}
