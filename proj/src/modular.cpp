#include "nu/modular.hpp"

#include <set>

namespace nu {

namespace {

std::vector<std::vector<Elem>> reduce_rows(const PrimeField& f, const std::vector<std::vector<Elem>>& rows, int width) {
    if (rows.empty() || width == 0) return {};
    Matrix<PrimeField> m(static_cast<int>(rows.size()), width);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < width; ++j) m.at(int(i), j) = rows[i][j];
    auto piv = row_reduce(f, m);
    std::vector<std::vector<Elem>> out;
    for (size_t i = 0; i < piv.size(); ++i)
        out.emplace_back(m.a.begin() + std::ptrdiff_t(i * width), m.a.begin() + std::ptrdiff_t((i + 1) * width));
    return out;
}

bool is_zero(const std::vector<Elem>& v) {
    for (Elem x : v)
        if (x) return false;
    return true;
}

Weight shifted(const Weight& w, const Weight& root, int m) {
    Weight out = w;
    for (size_t i = 0; i < out.size(); ++i) out[i] += m * root[i];
    return out;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

} // namespace

IrreducibleModel::IrreducibleModel(const ConstructionPlan& plan, int p) : plan_(plan), p_(p), f_(p) {
    const FamilyRank& fr = plan.fr;
    const int l = fr.rank;
    auto rs = RootSystem::build(fr);
    std::vector<RootVector> roots;
    for (int s : {1, -1})
        for (int i = 0; i < l; ++i) {
            RootVector r(l, 0);
            r[i] = s;
            roots.push_back(r);
        }
    module_ = std::make_unique<ExplicitModule>(fr, plan.expr, f_, roots);
    const auto& weights = module_->weights();
    local_.resize(weights.size());
    for (size_t b = 0; b < weights.size(); ++b) {
        auto& list = weight_basis_[weights[b]];
        local_[b] = static_cast<int>(list.size());
        list.push_back(static_cast<int>(b));
    }
    std::vector<Weight> alpha;  // simple roots as weights
    for (int i = 0; i < l; ++i) {
        RootVector r(l, 0);
        r[i] = 1;
        alpha.push_back(rs.root_to_weight(r));
    }

    const Weight& top = plan.model_weight;
    auto it = weight_basis_.find(top);
    if (it == weight_basis_.end() || it->second.size() != 1)
        throw Error("Unsupported", "construction " + plan.expr->describe() + " has no simple top weight space");
    const int vtop = it->second[0];
    for (int i = 0; i < l; ++i)
        if (!module_->images(i)[vtop].empty())
            throw Error("Mismatch", "top weight vector of " + plan.expr->describe() + " is not primitive");

    auto width = [&](const Weight& w) { return static_cast<int>(weight_basis_.at(w).size()); };

    // N: closure of the top vector under divided powers of lowering operators
    std::map<Weight, std::vector<std::vector<Elem>>> N, K;
    std::map<int, std::set<Weight>> pending{{0, {top}}};
    std::map<Weight, int> depth{{top, 0}};
    std::vector<Weight> order;
    N[top] = {{1}};
    while (!pending.empty()) {
        auto [d, layer] = *pending.begin();
        pending.erase(pending.begin());
        for (const Weight& nu : layer) {
            if (d > 0) {
                std::vector<std::vector<Elem>> gens;
                for (int i = 0; i < l; ++i)
                    for (int m = 1; m <= d; ++m) {
                        Weight src = shifted(nu, alpha[i], m);
                        auto ns = N.find(src);
                        if (ns == N.end()) {
                            if (!weight_basis_.count(src)) break;
                            continue;
                        }
                        for (const auto& v : ns->second) {
                            auto y = apply(l + i, m, src, v);
                            if (!is_zero(y)) gens.push_back(std::move(y));
                        }
                    }
                auto basis = reduce_rows(f_, gens, width(nu));
                if (basis.empty()) continue;
                N[nu] = std::move(basis);
            }
            order.push_back(nu);
            for (int i = 0; i < l; ++i)
                for (int m = 1;; ++m) {
                    Weight tgt = shifted(nu, alpha[i], -m);
                    if (!weight_basis_.count(tgt)) break;
                    if (!depth.count(tgt)) {
                        depth[tgt] = d + m;
                        pending[d + m].insert(tgt);
                    }
                }
        }
    }

    // K: the top coordinate functional pulled back along raising operators
    for (const Weight& nu : order) {
        const int d = depth.at(nu);
        if (d == 0) {
            K[nu] = {{1}};
            continue;
        }
        std::vector<std::vector<Elem>> gens;
        for (int i = 0; i < l; ++i)
            for (int m = 1; m <= d; ++m) {
                Weight src = shifted(nu, alpha[i], m);
                auto ks = K.find(src);
                if (ks == K.end()) {
                    if (!weight_basis_.count(src)) break;
                    continue;
                }
                for (const auto& phi : ks->second) {
                    auto y = pull_back(i, m, nu, phi);
                    if (!is_zero(y)) gens.push_back(std::move(y));
                }
            }
        auto basis = reduce_rows(f_, gens, width(nu));
        if (!basis.empty()) K[nu] = std::move(basis);
    }

    // L_mu from the pairing K_mu x N_mu
    character_.ambient = ambient_name(rs);
    int offset = 0;
    for (const Weight& nu : order) {
        auto kn = K.find(nu);
        if (kn == K.end()) continue;
        const auto& ns = N.at(nu);
        const auto& ks = kn->second;
        const int w = width(nu);
        Matrix<PrimeField> pair(static_cast<int>(ks.size()), static_cast<int>(ns.size()));
        for (size_t r = 0; r < ks.size(); ++r)
            for (size_t c = 0; c < ns.size(); ++c) {
                Elem s = 0;
                for (int j = 0; j < w; ++j)
                    if (ks[r][j] && ns[c][j]) s = f_.add(s, f_.mul(ks[r][j], ns[c][j]));
                pair.at(int(r), int(c)) = s;
            }
        Matrix<PrimeField> red = pair;
        auto cols = row_reduce(f_, red);
        if (cols.empty()) continue;
        Matrix<PrimeField> sub(pair.rows, static_cast<int>(cols.size()));
        for (int r = 0; r < pair.rows; ++r)
            for (size_t c = 0; c < cols.size(); ++c) sub.at(r, int(c)) = pair.at(r, cols[c]);
        auto rows = independent_rows(f_, sub);
        Space sp;
        sp.dim = static_cast<int>(cols.size());
        sp.offset = offset;
        offset += sp.dim;
        Matrix<PrimeField> q(sp.dim, sp.dim);
        for (int a = 0; a < sp.dim; ++a) {
            sp.functionals.push_back(ks[rows[a]]);
            sp.vectors.push_back(ns[cols[a]]);
            for (int b = 0; b < sp.dim; ++b) q.at(a, b) = sub.at(rows[a], b);
        }
        sp.q_inverse = inverse(f_, q);
        character_.mult[plan.from_model(nu)] = sp.dim;
        spaces_[nu] = std::move(sp);
    }
    dim_ = offset;
}

std::vector<Elem> IrreducibleModel::apply(int slot, int m, const Weight& from, const std::vector<Elem>& x) const {
    const auto& fb = weight_basis_.at(from);
    std::vector<Elem> y;
    const auto& img = module_->images(slot);
    int target_width = -1;
    for (size_t a = 0; a < fb.size(); ++a) {
        if (!x[a]) continue;
        for (const auto& t : img[fb[a]]) {
            if (t.power != m) continue;
            if (target_width < 0) {
                target_width = static_cast<int>(weight_basis_.at(module_->weights()[t.index]).size());
                y.assign(target_width, 0);
            }
            y[local_[t.index]] = f_.add(y[local_[t.index]], f_.mul(x[a], t.coef));
        }
    }
    return y;
}

std::vector<Elem> IrreducibleModel::pull_back(int slot, int m, const Weight& at, const std::vector<Elem>& phi) const {
    const auto& ab = weight_basis_.at(at);
    std::vector<Elem> y(ab.size(), 0);
    const auto& img = module_->images(slot);
    for (size_t a = 0; a < ab.size(); ++a) {
        Elem s = 0;
        for (const auto& t : img[ab[a]])
            if (t.power == m && phi[local_[t.index]]) s = f_.add(s, f_.mul(phi[local_[t.index]], t.coef));
        y[a] = s;
    }
    return y;
}

std::vector<int> IrreducibleModel::root_element_jordan(int simple_index) const {
    const int l = plan_.fr.rank;
    int j = -1;
    for (int k = 0; k < l; ++k)
        if (plan_.perm[k] == simple_index) j = k;
    auto rs = RootSystem::build(plan_.fr);
    RootVector r(l, 0);
    r[j] = 1;
    const Weight beta = rs.root_to_weight(r);

    // x_beta(1) preserves each coset mu + Z beta
    std::map<Weight, std::vector<Weight>> cosets;
    for (const auto& [mu, sp] : spaces_) {
        Weight rep = shifted(mu, beta, -floor_div(mu[j], 2));
        cosets[rep].push_back(mu);
    }
    std::vector<int> blocks;
    for (auto& [rep, members] : cosets) {
        std::sort(members.begin(), members.end(), [&](const Weight& a, const Weight& b) { return a[j] < b[j]; });
        std::map<Weight, int> off;
        int n = 0;
        for (const auto& mu : members) {
            off[mu] = n;
            n += spaces_.at(mu).dim;
        }
        Matrix<PrimeField> nil(n, n);
        for (const auto& mu : members) {
            const Space& src = spaces_.at(mu);
            for (int m = 1;; ++m) {
                Weight tgt = shifted(mu, beta, m);
                auto ts = spaces_.find(tgt);
                if (ts == spaces_.end()) {
                    if (!weight_basis_.count(tgt)) break;
                    continue;
                }
                const Space& dst = ts->second;
                // raw[r][c] = phi_r(E^(m) n_c)
                Matrix<PrimeField> raw(dst.dim, src.dim);
                for (int c = 0; c < src.dim; ++c) {
                    auto y = apply(j, m, mu, src.vectors[c]);
                    if (y.empty()) continue;
                    for (int rr = 0; rr < dst.dim; ++rr) {
                        Elem s = 0;
                        for (size_t k = 0; k < y.size(); ++k)
                            if (y[k] && dst.functionals[rr][k]) s = f_.add(s, f_.mul(y[k], dst.functionals[rr][k]));
                        raw.at(rr, c) = s;
                    }
                }
                auto block = multiply(f_, dst.q_inverse, raw);
                for (int a = 0; a < dst.dim; ++a)
                    for (int c = 0; c < src.dim; ++c) nil.at(off.at(tgt) + a, off.at(mu) + c) = block.at(a, c);
            }
        }
        auto b = jordan_blocks(f_, nil);
        blocks.insert(blocks.end(), b.begin(), b.end());
    }
    std::sort(blocks.rbegin(), blocks.rend());
    return blocks;
}

} // namespace nu
