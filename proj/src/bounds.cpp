#include "nu/bounds.hpp"
#include "nu/irreducible.hpp"

namespace nu {

namespace {

RootSystem sub_root_system(const FamilyRank& fr, const Subsystem& sub) {
    auto full = classical_cartan(fr);
    std::vector<std::vector<int>> m;
    for (int r : sub.simple_roots) {
        std::vector<int> row;
        for (int c : sub.simple_roots) row.push_back(full[r - 1][c - 1]);
        m.push_back(std::move(row));
    }
    return RootSystem(std::move(m));
}

} // namespace

Subsystem Subsystem::of_weight(const Weight& w) {
    Subsystem s;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == 0) s.simple_roots.push_back(static_cast<int>(i) + 1);
    return s;
}

long long subsystem_root_count(const FamilyRank& fr, const Subsystem& sub) {
    if (sub.simple_roots.empty()) return 0;
    return static_cast<long long>(sub_root_system(fr, sub).root_count());
}

BigInt subsystem_weyl_order(const FamilyRank& fr, const Subsystem& sub) {
    if (sub.simple_roots.empty()) return 1;
    return sub_root_system(fr, sub).weyl_group_order();
}

Rational r_psi(const FamilyRank& fr, const Subsystem& sub) {
    auto rs = RootSystem::build(fr);
    long long short_roots = 0;
    for (const auto& a : rs.positive_roots())
        if (!rs.is_long(a)) short_roots += 2;
    if (short_roots == 0) short_roots = static_cast<long long>(rs.root_count());
    BigInt index = rs.weyl_group_order() / subsystem_weyl_order(fr, sub);
    BigInt outside = static_cast<long long>(rs.root_count()) - subsystem_root_count(fr, sub);
    return Rational(index * outside, BigInt(2 * short_roots));
}

BigInt r_psi_length(const FamilyRank& fr, const Subsystem& sub, bool long_roots) {
    auto rs = RootSystem::build(fr);
    std::vector<bool> in_sub(fr.rank, false);
    for (int r : sub.simple_roots) in_sub[r - 1] = true;
    long long total = 0, inside = 0;
    for (const auto& a : rs.positive_roots()) {
        // in the simply laced types every root counts as long
        if (rs.is_long(a) != long_roots) continue;
        ++total;
        bool supported = true;
        for (int j = 0; j < fr.rank; ++j)
            if (a[j] != 0 && !in_sub[j]) supported = false;
        if (supported) ++inside;
    }
    if (total == 0) return 0;
    BigInt index = rs.weyl_group_order() / subsystem_weyl_order(fr, sub);
    BigInt num = index * (total - inside);
    if (num % total != 0) throw Error("Mismatch", "non-integral r_Psi");
    return num / total / 2;
}

namespace {

BigInt s_lambda_over(const FamilyRank& fr, const std::vector<Weight>& subs) {
    auto sum_for = [&](bool long_roots) {
        BigInt total = 0;
        for (const auto& mu : subs) total += r_psi_length(fr, Subsystem::of_weight(mu), long_roots);
        return total;
    };
    BigInt best = sum_for(true);
    auto rs = RootSystem::build(fr);
    bool laced = true;
    for (const auto& a : rs.positive_roots()) laced = laced && rs.is_long(a);
    if (!laced) best = std::min(best, sum_for(false));
    return best;
}

} // namespace

BigInt s_lambda(const FamilyRank& fr, const Weight& lambda) { return s_lambda_over(fr, subdominant_weights(fr, lambda)); }

std::vector<Weight> s_lambda_weights(const ModuleSpec& spec) {
    if (spec.p != 2 || spec.fr.family == Family::A || spec.fr.family == Family::D)
        return subdominant_weights(spec.fr, spec.highest);
    if (spec.fr.family == Family::B)
        throw Error("Unsupported", "s_lambda for B in characteristic 2 goes through the C side");
    std::vector<Weight> out;
    for (const auto& [mu, m] : Irreducible::get(spec.fr, spec.highest, spec.p)->character().mult)
        if (m > 0 && is_dominant(mu)) out.push_back(mu);
    return out;
}

BigInt s_lambda(const ModuleSpec& spec) { return s_lambda_over(spec.fr, s_lambda_weights(spec)); }

} // namespace nu
