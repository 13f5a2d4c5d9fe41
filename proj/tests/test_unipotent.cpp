#include "doctest.h"

#include "nu/irreducible.hpp"
#include "nu/unipotent.hpp"

using namespace nu;

namespace {

JordanType J(std::vector<int> b, int p) { return make_jordan(std::move(b), p); }

} // namespace

TEST_CASE("tensor products of Jordan blocks") {
    CHECK(jordan_tensor(J({2}, 0), J({2}, 0)).blocks == std::vector<int>{3, 1});
    CHECK(jordan_tensor(J({2}, 2), J({2}, 2)).blocks == std::vector<int>{2, 2});
    for (int n = 1; n <= 6; ++n) CHECK(jordan_tensor(J({1}, 3), J({n}, 3)).blocks == std::vector<int>{n});

    // Clebsch-Gordan in characteristic zero against explicit matrices
    for (int m = 1; m <= 12; ++m)
        for (int n = m; n <= 12; ++n) {
            std::vector<int> cg;
            for (int k = m + n - 1; k >= n - m + 1; k -= 2) cg.push_back(k);
            CHECK(jordan_tensor(J({m}, 0), J({n}, 0)).blocks == cg);
        }
    for (int m = 1; m <= 7; ++m)
        for (int n = m; n <= 7; ++n)
            CHECK(explicit_tensor_jordan({m}, {n}, 0).blocks == jordan_tensor(J({m}, 0), J({n}, 0)).blocks);
}

TEST_CASE("modular tensor products agree with explicit matrices") {
    for (int p : {2, 3, 5, 7})
        for (int m = 1; m <= 8; ++m)
            for (int n = 1; n <= 8; ++n) {
                auto expect = explicit_tensor_jordan({m}, {n}, p);
                auto got = jordan_tensor(J({m}, p), J({n}, p));
                CAPTURE(p);
                CAPTURE(m);
                CAPTURE(n);
                CHECK(got == expect);
                CHECK(got.dim() == m * n);
            }
}

TEST_CASE("exterior square in characteristic two") {
    CHECK(fixed_dim(gow_laffey_wedge2(6)) == 3);
    CHECK(gow_laffey_wedge2(6).blocks == std::vector<int>{8, 6, 1});
    CHECK(jordan_wedge2(J({1, 1}, 2)).blocks == std::vector<int>{1});
    for (int i = 1; i <= 64; ++i) {
        auto w = gow_laffey_wedge2(i);
        CHECK(fixed_dim(w) == wedge2_fixed_dim_char2(i));
        CHECK(w.dim() == i * (i - 1) / 2);
    }
    for (int i = 1; i <= 12; ++i) {
        CAPTURE(i);
        CHECK(gow_laffey_wedge2(i) == explicit_functor_jordan(Functor::Wedge2, {i}, 2));
    }
}

TEST_CASE("squares of multi-block types agree with explicit matrices") {
    std::vector<std::vector<int>> shapes{{2, 1}, {2, 2}, {3, 1, 1}, {3, 2}, {4, 2, 1}, {5, 3}, {2, 2, 2, 1}, {6}, {7, 1}};
    for (int p : {0, 2, 3, 5, 7})
        for (const auto& s : shapes) {
            CAPTURE(p);
            CAPTURE(to_string(J(s, p)));
            CHECK(jordan_wedge2(J(s, p)) == explicit_functor_jordan(Functor::Wedge2, s, p));
            CHECK(jordan_sym2(J(s, p)) == explicit_functor_jordan(Functor::Sym2, s, p));
        }
    for (int p : {0, 3, 5, 7})
        for (int n = 1; n <= 12; ++n) {
            CAPTURE(p);
            CAPTURE(n);
            CHECK(jordan_wedge2(J({n}, p)) == explicit_functor_jordan(Functor::Wedge2, {n}, p));
            CHECK(jordan_sym2(J({n}, p)) == explicit_functor_jordan(Functor::Sym2, {n}, p));
        }
}

TEST_CASE("root elements on natural modules") {
    CHECK(root_element_on_natural({{Family::C, 3}, RootChoice::Alpha1}).blocks == std::vector<int>{2, 2, 1, 1});
    CHECK(root_element_on_natural({{Family::C, 3}, RootChoice::AlphaEll}).blocks == std::vector<int>{2, 1, 1, 1, 1});
    CHECK(root_element_on_natural({{Family::A, 4}, RootChoice::Alpha1}).blocks == std::vector<int>{2, 1, 1, 1});
    CHECK(root_element_on_natural({{Family::A, 4}, RootChoice::AlphaEll}).blocks == std::vector<int>{2, 1, 1, 1});
    // Bourbaki labelling: alpha_1 is long in B, alpha_l short
    CHECK(root_element_on_natural({{Family::B, 3}, RootChoice::Alpha1}).blocks == std::vector<int>{2, 2, 1, 1, 1});
    CHECK(root_element_on_natural({{Family::B, 3}, RootChoice::AlphaEll}).blocks == std::vector<int>{3, 1, 1, 1, 1});
    CHECK(root_element_on_natural({{Family::D, 5}, RootChoice::Alpha1}).blocks ==
          std::vector<int>{2, 2, 1, 1, 1, 1, 1, 1});
    for (int l = 2; l <= 7; ++l) {
        auto c = root_element_on_natural({{Family::C, l}, RootChoice::AlphaEll});
        CHECK(fixed_dim(c) == 2 * l - 1);
        // the long root element on the exterior square
        CHECK(fixed_dim(jordan_wedge2(c)) == 2 * l * l - 3 * l + 2);
    }
    for (int l = 2; l <= 7; ++l) {
        auto a = root_element_on_natural({{Family::A, l}, RootChoice::Alpha1});
        CHECK(fixed_dim(jordan_sym2(a)) == l * (l + 1) / 2);
    }
}

TEST_CASE("filtration bound") {
    CHECK(filtration_bound({3, 3, 3}) == 9);
    CHECK(filtration_bound({7}) == 7);
}

TEST_CASE("max fixed space on irreducible modules") {
    for (int l = 3; l <= 6; ++l) {
        CHECK(max_fixed_space_unipotent({{Family::A, l}, [&] { Weight w(l, 0); w[0] = 1; return w; }(), 0}).value == l);
        for (int p : {0, 3, 5}) {
            Weight w(l, 0);
            w[0] = 2;
            auto r = max_fixed_space_unipotent({{Family::B, l}, w, p});
            CHECK(r.value == 2 * l * l - l - epsilon(p, 2 * l + 1));
        }
        for (int p : {0, 2, 3, 5}) {
            Weight w(l, 0);
            w[1] = 1;
            auto r = max_fixed_space_unipotent({{Family::C, l}, w, p});
            CHECK(r.value == 2 * l * l - 3 * l + 1 - epsilon(p, l) + epsilon(l, 2) * epsilon(p, 2));
        }
    }
}

TEST_CASE("linkage decides when Weyl modules stay simple") {
    auto a3 = RootSystem::build({Family::A, 3});
    CHECK(weyl_module_is_simple(a3, {1, 0, 1}, 3));
    CHECK_FALSE(weyl_module_is_simple(a3, {1, 0, 1}, 2));
    auto c3 = RootSystem::build({Family::C, 3});
    CHECK_FALSE(weyl_module_is_simple(c3, {1, 0, 1}, 3));
    CHECK(weyl_module_is_simple(c3, {1, 0, 1}, 5));
    CHECK(weyl_module_is_simple(c3, {1, 0, 0}, 2));
    // characters of simple modules: the linkage route and the model agree
    auto irr = Irreducible::get({Family::C, 3}, {1, 0, 1}, 3);
    CHECK(irr->source() == CharacterSource::Model);
    CHECK(irr->dim() == 57);
    CHECK(Irreducible::get({Family::C, 3}, {1, 0, 1}, 5)->dim() == 70);
    // Steinberg: L(2 w1 + w3) at p = 2 is L(w3) tensor L(w1)^[2]
    auto st = Irreducible::get({Family::C, 3}, {2, 0, 1}, 2);
    CHECK(st->source() == CharacterSource::Steinberg);
    CHECK(st->dim() == 48);
}
