#include "nu/irreducible.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace nu {

namespace {

RootVector highest_short_root(const RootSystem& rs) {
    const auto& pos = rs.positive_roots();
    bool any_short = false;
    for (const auto& r : pos) any_short = any_short || !rs.is_long(r);
    RootVector best;
    int best_height = -1;
    for (const auto& r : pos) {
        if (any_short && rs.is_long(r)) continue;
        int h = std::accumulate(r.begin(), r.end(), 0);
        if (h > best_height) {
            best_height = h;
            best = r;
        }
    }
    return best;
}

Weight plus_rho(Weight w) {
    for (auto& x : w) ++x;
    return w;
}

} // namespace

std::string to_string(CharacterSource s) {
    switch (s) {
    case CharacterSource::Weyl: return "weyl";
    case CharacterSource::Model: return "model";
    case CharacterSource::Steinberg: return "steinberg";
    }
    return "?";
}

Weight alcove_reduce(const RootSystem& rs, Weight x, int p) {
    const RootVector a0 = highest_short_root(rs);
    const Weight a0w = rs.root_to_weight(a0);
    for (;;) {
        x = rs.dominant_representative(x);
        int c = rs.coroot_pairing(x, a0);
        if (c <= p) return x;
        // reflection in the wall <x, alpha_0^vee> = p
        for (size_t k = 0; k < x.size(); ++k) x[k] -= (c - p) * a0w[k];
    }
}

bool weyl_module_is_simple(const RootSystem& rs, const Weight& lambda, int p) {
    if (p == 0) return true;
    const Weight target = alcove_reduce(rs, plus_rho(lambda), p);
    for (const auto& mu : subdominant_weights(rs, lambda)) {
        if (mu == lambda) continue;
        if (alcove_reduce(rs, plus_rho(mu), p) == target) return false;
    }
    return true;
}

std::shared_ptr<const Irreducible> Irreducible::get(const FamilyRank& fr, const Weight& lambda, int p) {
    using Key = std::tuple<int, int, Weight, int>;
    static std::map<Key, std::shared_ptr<const Irreducible>> cache;
    static std::mutex mu;
    Key key{static_cast<int>(fr.family), fr.rank, lambda, p};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::shared_ptr<const Irreducible> made(new Irreducible(fr, lambda, p));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, made).first->second;
}

Irreducible::Irreducible(const FamilyRank& fr, const Weight& lambda, int p) : fr_(fr), lambda_(lambda), p_(p) {
    if (p < 0 || (p > 0 && !is_prime(p))) throw Error("InvalidCharacteristic", std::to_string(p));
    auto rs = RootSystem::build(fr);
    if (static_cast<int>(lambda.size()) != fr.rank) throw Error("Mismatch", "weight length differs from rank");
    for (int x : lambda)
        if (x < 0) throw Error("NotDominant", weight_to_string(lambda));

    bool restricted = true;
    for (int x : lambda) restricted = restricted && (p == 0 || x < p);
    if (!restricted) {
        // Steinberg: L(sum p^k lambda_k) = tensor of L(lambda_k)^[k]
        source_ = CharacterSource::Steinberg;
        Weight rest = lambda;
        int q = 1;
        character_.ambient = ambient_name(rs);
        character_.mult[Weight(fr.rank, 0)] = 1;
        while (std::any_of(rest.begin(), rest.end(), [](int x) { return x != 0; })) {
            Weight digit(fr.rank);
            for (int k = 0; k < fr.rank; ++k) {
                digit[k] = rest[k] % p;
                rest[k] /= p;
            }
            if (std::any_of(digit.begin(), digit.end(), [](int x) { return x != 0; })) {
                auto factor = Irreducible::get(fr, digit, p);
                character_ = tensor(character_, frobenius_twist(factor->character(), q));
                twisted_factors_.push_back(factor);
            }
            q *= p;
        }
        return;
    }
    if (weyl_module_is_simple(rs, lambda, p)) {
        source_ = CharacterSource::Weyl;
        character_ = freudenthal_character(rs, lambda);
        return;
    }
    auto plan = plan_construction(fr, lambda);
    if (!plan) throw Error("Unsupported", "no explicit construction for " + to_string(fr) + " " + weight_to_string(lambda));
    source_ = CharacterSource::Model;
    std::call_once(model_once_, [&] { model_ = std::make_unique<IrreducibleModel>(*plan, p); });
    character_ = model_->character();
}

const IrreducibleModel& Irreducible::model() const {
    std::call_once(model_once_, [&] {
        auto plan = plan_construction(fr_, lambda_);
        if (!plan)
            throw Error("Unsupported", "no explicit construction for " + to_string(fr_) + " " + weight_to_string(lambda_));
        model_ = std::make_unique<IrreducibleModel>(*plan, p_);
    });
    return *model_;
}

JordanType Irreducible::root_element_jordan(int i) const {
    {
        std::lock_guard<std::mutex> lock(jordan_mu_);
        auto it = jordan_cache_.find(i);
        if (it != jordan_cache_.end()) return it->second;
    }
    JordanType j;
    if (source_ == CharacterSource::Steinberg) {
        // x_alpha(1) is fixed by the Frobenius map, so each twisted factor
        // contributes the Jordan type of its untwisted module
        j = make_jordan({1}, p_);
        for (const auto& f : twisted_factors_) j = jordan_tensor(j, f->root_element_jordan(i));
    } else {
        int longest = 0;
        for (const auto& [nu, m] : character_.mult) longest = std::max(longest, nu[i]);
        if (source_ == CharacterSource::Weyl && (p_ == 0 || longest < p_))
            j = jordan_from_weight_strings(RootSystem::build(fr_), character_, i, p_);
        else
            j = make_jordan(model().root_element_jordan(i), p_);
    }
    std::lock_guard<std::mutex> lock(jordan_mu_);
    jordan_cache_.emplace(i, j);
    return j;
}

} // namespace nu
