#include "doctest.h"

#include "nu/catalog.hpp"
#include "nu/irreducible.hpp"

using namespace nu;

TEST_CASE("patterns") {
    auto w = WeightPattern::parse("2w1+w(l-1)");
    CHECK(*w.at(5) == Weight{2, 0, 0, 1, 0});
    CHECK(*WeightPattern::parse("wl").at(3) == Weight{0, 0, 1});
    CHECK(*WeightPattern::parse("0").at(2) == Weight{0, 0});
    CHECK_FALSE(WeightPattern::parse("w4").at(3).has_value());
    CHECK(RankRange::parse("3..").contains(40));
    CHECK_FALSE(RankRange::parse("3..8").contains(9));
    auto c = CharCondition::parse("p!=2,3");
    CHECK(c.matches(0));
    CHECK(c.matches(5));
    CHECK_FALSE(c.matches(3));
    CHECK(CharCondition::parse("p=3,5").matches(5));
    CHECK_FALSE(CharCondition::parse("p=3").matches(0));
}

TEST_CASE("catalog lookups") {
    CHECK(irreducible_dim({{Family::C, 3}, {1, 0, 1}, 3}) == 57);
    for (int l = 2; l <= 7; ++l) {
        Weight w(l, 0);
        w[0] = w[l - 1] = 1;
        CHECK(irreducible_dim({{Family::A, l}, w, l + 1 == 4 ? 2 : (l + 1 == 3 ? 3 : 0)}) ==
              l * l + 2 * l - (l + 1 == 4 || l + 1 == 3 ? 1 : 0));
    }
    CHECK(irreducible_dim({{Family::D, 6}, {0, 0, 0, 0, 1, 1}, 2}) == 560);
    CHECK(irreducible_dim({{Family::B, 3}, {1, 0, 0}, 0}) == 7);
    CHECK_THROWS_WITH_AS(irreducible_dim({{Family::A, 3}, {1, 1, 0}, 3}), doctest::Contains("UnknownModularDim"),
                         Error);
    CHECK(modular_dim({{Family::A, 3}, {1, 1, 0}, 3}) > 0);
}

// Every catalog record of moderate size, at the characteristics of the
// acceptance grid, against the dimension of the explicitly extracted module.
TEST_CASE("catalog dimensions agree with explicit modules") {
    int checked = 0;
    for (const auto& e : Catalog::standard().entries()) {
        for (int l = e.ranks.lo; l <= (e.ranks.hi < 0 ? e.ranks.lo + 3 : e.ranks.hi); ++l) {
            auto w = e.weight.at(l);
            if (!w) continue;
            FamilyRank fr{e.family, l};
            if (weyl_dim(fr, *w) > 3100) continue;
            for (int p : {0, 2, 3, 5, 7}) {
                ModuleSpec spec{fr, *w, p};
                if (!e.matches(spec) || Catalog::standard().find(spec) != &e) continue;
                CAPTURE(to_string(fr));
                CAPTURE(e.weight.text());
                CAPTURE(p);
                CHECK(BigInt(Irreducible::get(fr, *w, p)->dim()) == *Catalog::standard().lookup(spec));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}
