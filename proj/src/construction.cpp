#include "nu/construction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace nu {

NaturalModule NaturalModule::build(const FamilyRank& fr) {
    validate(fr);
    NaturalModule w;
    w.fr = fr;
    const int l = fr.rank, n = natural_coords(fr);
    auto unit = [&](int i, int s) {
        std::vector<int> e(n, 0);
        e[i] = s;
        return e;
    };
    if (fr.family == Family::A) {
        for (int i = 0; i <= l; ++i) w.eps.push_back(unit(i, 1));
    } else {
        for (int i = 0; i < l; ++i) w.eps.push_back(unit(i, 1));
        if (fr.family == Family::B) w.eps.push_back(std::vector<int>(n, 0));
        for (int i = l - 1; i >= 0; --i) w.eps.push_back(unit(i, -1));
    }
    w.dim = static_cast<int>(w.eps.size());
    for (const auto& e : w.eps) w.weights.push_back(epsilon_to_weight(fr, e));
    if (fr.family != Family::A) {
        w.gram.assign(w.dim, std::vector<long long>(w.dim, 0));
        const int d = w.dim;
        for (int i = 0; i < l; ++i) {
            w.gram[i][d - 1 - i] = 1;
            w.gram[d - 1 - i][i] = fr.family == Family::C ? -1 : 1;
        }
        if (fr.family == Family::B) w.gram[l][l] = 2;
    }
    return w;
}

namespace {

// Rational nullspace of a small dense system.
std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> m, int cols) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> out;
    for (int free = 0; free < cols; ++free) {
        if (std::find(piv.begin(), piv.end(), free) != piv.end()) continue;
        std::vector<Rational> v(cols, 0);
        v[free] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][free];
        out.push_back(v);
    }
    return out;
}

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
    const size_t n = a.size();
    IntMatrix c(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

} // namespace

IntMatrix NaturalModule::root_matrix(const RootVector& beta) const {
    const int n = natural_coords(fr);
    const auto simple = simple_roots_epsilon(fr);
    std::vector<int> be(n, 0);
    for (int j = 0; j < fr.rank; ++j)
        for (int k = 0; k < n; ++k) be[k] += beta[j] * simple[j][k];

    std::vector<std::pair<int, int>> slots;  // X[i][j] may be nonzero
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            bool ok = true;
            for (int k = 0; k < n; ++k) ok = ok && eps[i][k] == eps[j][k] + be[k];
            if (ok) slots.emplace_back(i, j);
        }
    if (slots.empty()) throw Error("Mismatch", "no root space for the requested root");

    IntMatrix x(dim, std::vector<long long>(dim, 0));
    if (fr.family == Family::A) {
        if (slots.size() != 1) throw Error("Mismatch", "unexpected root space in type A");
        x[slots[0].first][slots[0].second] = 1;
        return x;
    }
    // X^T J + J X = 0 over the slot unknowns
    const int u = static_cast<int>(slots.size());
    std::vector<std::vector<Rational>> eq;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            std::vector<Rational> row(u, 0);
            bool any = false;
            for (int s = 0; s < u; ++s) {
                auto [i, j] = slots[s];
                // (X^T J)[a][b] = sum_k X[k][a] J[k][b]
                if (j == a && gram[i][b]) { row[s] += gram[i][b]; any = true; }
                // (J X)[a][b] = sum_k J[a][k] X[k][b]
                if (j == b && gram[a][i]) { row[s] += gram[a][i]; any = true; }
            }
            if (any) eq.push_back(row);
        }
    auto ns = rational_nullspace(eq, u);
    if (ns.size() != 1) throw Error("Mismatch", "root space is not one-dimensional");
    BigInt den = 1;
    for (const auto& v : ns[0]) den = boost::multiprecision::lcm(den, denominator(v));
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& v : ns[0]) {
        ints.push_back(numerator(v) * (den / denominator(v)));
        g = boost::multiprecision::gcd(g, ints.back());
    }
    int sign = 0;
    for (const auto& v : ints)
        if (v != 0) { sign = v > 0 ? 1 : -1; break; }
    for (int s = 0; s < u; ++s)
        x[slots[s].first][slots[s].second] = static_cast<long long>(ints[s] / g) * sign;
    return x;
}

std::vector<IntMatrix> NaturalModule::root_element_series(const RootVector& beta) const {
    IntMatrix x = root_matrix(beta);
    IntMatrix id(dim, std::vector<long long>(dim, 0));
    for (int i = 0; i < dim; ++i) id[i][i] = 1;
    std::vector<IntMatrix> out{id};
    IntMatrix power = x;
    long long fact = 1;
    for (int m = 1;; ++m) {
        fact *= m;
        bool zero = true;
        IntMatrix term = power;
        for (auto& row : term)
            for (auto& v : row) {
                if (v % fact != 0) throw Error("Mismatch", "divided power of a root matrix is not integral");
                v /= fact;
                zero = zero && v == 0;
            }
        if (zero) break;
        out.push_back(term);
        if (m > dim) throw Error("Mismatch", "root matrix is not nilpotent");
        power = int_multiply(power, x);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string ModuleExpr::describe() const {
    switch (kind) {
    case Natural: return "W";
    case Dual: return kids[0]->describe() + "*";
    case Wedge: return "L" + std::to_string(k) + "(" + kids[0]->describe() + ")";
    case Sym: return "S" + std::to_string(k) + "(" + kids[0]->describe() + ")";
    case Tensor: return kids[0]->describe() + "(x)" + kids[1]->describe();
    case Spin: return "Spin" + std::to_string(k);
    }
    return "?";
}

namespace {

BigInt binom_big(const BigInt& n, int k) {
    if (k < 0 || n < k) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

BigInt ModuleExpr::dimension(int natural_dim) const {
    switch (kind) {
    case Natural: return natural_dim;
    case Dual: return kids[0]->dimension(natural_dim);
    case Wedge: return binom_big(kids[0]->dimension(natural_dim), k);
    case Sym: return binom_big(kids[0]->dimension(natural_dim) + k - 1, k);
    case Tensor: return kids[0]->dimension(natural_dim) * kids[1]->dimension(natural_dim);
    case Spin: return spin_dim;
    }
    return 0;
}

ModuleExprP natural_expr() { return std::make_shared<ModuleExpr>(); }

ModuleExprP dual_expr(ModuleExprP m) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = ModuleExpr::Dual;
    e->kids = {std::move(m)};
    return e;
}

ModuleExprP wedge_expr(int k, ModuleExprP m) {
    if (k == 1) return m;
    auto e = std::make_shared<ModuleExpr>();
    e->kind = ModuleExpr::Wedge;
    e->k = k;
    e->kids = {std::move(m)};
    return e;
}

ModuleExprP sym_expr(int k, ModuleExprP m) {
    if (k == 1) return m;
    auto e = std::make_shared<ModuleExpr>();
    e->kind = ModuleExpr::Sym;
    e->k = k;
    e->kids = {std::move(m)};
    return e;
}

ModuleExprP tensor_expr(ModuleExprP a, ModuleExprP b) {
    if (!a) return b;
    auto e = std::make_shared<ModuleExpr>();
    e->kind = ModuleExpr::Tensor;
    e->kids = {std::move(a), std::move(b)};
    return e;
}

ModuleExprP spin_expr(const FamilyRank& fr, int fundamental) {
    const int l = fr.rank;
    bool ok = (fr.family == Family::B && fundamental == l) ||
              (fr.family == Family::D && (fundamental == l || fundamental == l - 1));
    if (!ok) throw Error("Unsupported", "no spin module for this node");
    auto e = std::make_shared<ModuleExpr>();
    e->kind = ModuleExpr::Spin;
    e->k = fundamental;
    e->spin_dim = BigInt(1) << (fr.family == Family::B ? l : l - 1);
    return e;
}

Weight ConstructionPlan::to_model(const Weight& w) const {
    Weight out(w.size());
    for (size_t j = 0; j < w.size(); ++j) out[j] = w[perm[j]];
    if (dual)
        for (int& v : out) v = -v;
    return out;
}

Weight ConstructionPlan::from_model(const Weight& w) const {
    Weight out(w.size());
    for (size_t j = 0; j < w.size(); ++j) out[perm[j]] = dual ? -w[j] : w[j];
    return out;
}

std::string ConstructionPlan::describe() const {
    std::string s = expr->describe();
    if (dual) s = "dual of L(" + weight_to_string(model_weight) + ") in " + s;
    else if (model_weight != lambda) s = "L(" + weight_to_string(model_weight) + ") in " + s;
    return s;
}

namespace {

// Direct construction for a model weight, without symmetries.
ModuleExprP direct_construction(const FamilyRank& fr, const Weight& mu) {
    const int l = fr.rank;
    ModuleExprP w = natural_expr();
    ModuleExprP acc;
    auto add = [&](int power, ModuleExprP m) {
        if (power > 0) acc = tensor_expr(acc, sym_expr(power, m));
    };
    // W (x) W* is smaller than W (x) L^l(W) only in presentation, but it keeps
    // the adjoint construction recognisable
    if (fr.family == Family::A && l >= 2) {
        Weight adj(l, 0);
        adj[0] = 1;
        adj[l - 1] = 1;
        if (mu == adj) return tensor_expr(w, dual_expr(w));
    }
    int generic_top = l;
    if (fr.family == Family::B) generic_top = l - 1;
    if (fr.family == Family::D) generic_top = l - 2;
    for (int i = 1; i <= generic_top; ++i) add(mu[i - 1], wedge_expr(i, w));
    if (fr.family == Family::B) {
        add(mu[l - 1] / 2, wedge_expr(l, w));
        if (mu[l - 1] % 2) acc = tensor_expr(acc, spin_expr(fr, l));
    }
    if (fr.family == Family::D) {
        int a = mu[l - 2], b = mu[l - 1];
        add(std::min(a, b), wedge_expr(l - 1, w));
        add(std::abs(a - b) / 2, wedge_expr(l, w));
        if ((a - b) % 2) acc = tensor_expr(acc, spin_expr(fr, a > b ? l - 1 : l));
    }
    if (!acc) throw Error("Unsupported", "the trivial module has no construction");
    return acc;
}

} // namespace

std::optional<ConstructionPlan> plan_construction(const FamilyRank& fr, const Weight& lambda) {
    validate(fr);
    const int l = fr.rank;
    if (static_cast<int>(lambda.size()) != l || !is_dominant(lambda))
        throw Error("NotDominant", "construction needs a dominant weight");
    std::vector<int> id(l);
    std::iota(id.begin(), id.end(), 0);

    std::vector<std::pair<std::vector<int>, bool>> symmetries{{id, false}};
    if (fr.family == Family::A) {
        std::vector<int> rev(id.rbegin(), id.rend());
        symmetries.emplace_back(rev, true);
    }
    if (fr.family == Family::D) {
        std::vector<int> swap = id;
        std::swap(swap[l - 2], swap[l - 1]);
        symmetries.emplace_back(swap, false);
        if (l == 4) {
            std::vector<int> outer{0, 2, 3};
            std::sort(outer.begin(), outer.end());
            do {
                std::vector<int> perm = id;
                perm[0] = outer[0];
                perm[2] = outer[1];
                perm[3] = outer[2];
                symmetries.emplace_back(perm, false);
            } while (std::next_permutation(outer.begin(), outer.end()));
        }
    }

    std::optional<ConstructionPlan> best;
    BigInt best_dim = 0;
    const int nat = NaturalModule::build(fr).dim;
    for (const auto& [perm, dual] : symmetries) {
        ConstructionPlan plan;
        plan.fr = fr;
        plan.lambda = lambda;
        plan.perm = perm;
        plan.dual = dual;
        Weight mw(l);
        for (int j = 0; j < l; ++j) mw[j] = lambda[perm[j]];
        plan.model_weight = mw;
        plan.expr = direct_construction(fr, mw);
        if (!plan.expr) continue;
        BigInt d = plan.expr->dimension(nat);
        if (!best || d < best_dim) {
            best = plan;
            best_dim = d;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------

namespace {

struct NodeData {
    std::vector<Weight> weights;
    std::vector<std::vector<std::vector<Term>>> images;  // [root][basis]
};

using TermMap = std::map<std::pair<int, int>, Elem>;

std::vector<Term> flush(const PrimeField& f, const TermMap& acc) {
    std::vector<Term> out;
    for (const auto& [key, c] : acc)
        if (c) out.push_back({key.first, key.second, c});
    (void)f;
    return out;
}

Weight add_weights(const Weight& a, const Weight& b) {
    Weight out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

// Products of k child vectors (wedge when alternating, otherwise symmetric).
NodeData power_node(const PrimeField& f, const NodeData& child, int k, bool alternating, int nroots) {
    const int n = static_cast<int>(child.weights.size());
    NodeData out;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> basis;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            index[cur] = static_cast<int>(basis.size());
            basis.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            gen(alternating ? i + 1 : i);
            cur.pop_back();
        }
    };
    gen(0);
    for (const auto& b : basis) {
        Weight w(child.weights[0].size(), 0);
        for (int i : b) w = add_weights(w, child.weights[i]);
        out.weights.push_back(w);
    }
    out.images.resize(nroots);
    for (int r = 0; r < nroots; ++r) {
        const auto& cim = child.images[r];
        auto& im = out.images[r];
        im.resize(basis.size());
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            const auto& b = basis[bi];
            bool moved = false;
            for (int i : b) moved = moved || !cim[i].empty();
            if (!moved) continue;
            TermMap acc;
            std::vector<int> idx(k);
            std::function<void(int, int, Elem)> expand = [&](int pos, int power, Elem coef) {
                if (pos == k) {
                    if (power == 0) return;
                    std::vector<int> s = idx;
                    int sign = 1;
                    if (alternating) {
                        // insertion sort tracking the permutation sign
                        for (int a = 1; a < k; ++a)
                            for (int c = a; c > 0 && s[c - 1] > s[c]; --c) {
                                std::swap(s[c - 1], s[c]);
                                sign = -sign;
                            }
                        for (int a = 1; a < k; ++a)
                            if (s[a] == s[a - 1]) return;
                    } else {
                        std::sort(s.begin(), s.end());
                    }
                    int target = index.at(s);
                    Elem c = sign > 0 ? coef : f.neg(coef);
                    Elem& slot = acc[{power, target}];
                    slot = f.add(slot, c);
                    return;
                }
                idx[pos] = b[pos];
                expand(pos + 1, power, coef);
                for (const auto& t : cim[b[pos]]) {
                    idx[pos] = t.index;
                    expand(pos + 1, power + t.power, f.mul(coef, t.coef));
                }
            };
            expand(0, 0, 1);
            im[bi] = flush(f, acc);
        }
    }
    return out;
}

NodeData tensor_node(const PrimeField& f, const NodeData& a, const NodeData& b, int nroots) {
    const int na = static_cast<int>(a.weights.size()), nb = static_cast<int>(b.weights.size());
    NodeData out;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) out.weights.push_back(add_weights(a.weights[i], b.weights[j]));
    out.images.resize(nroots);
    for (int r = 0; r < nroots; ++r) {
        auto& im = out.images[r];
        im.resize(std::size_t(na) * nb);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) {
                const auto& ti = a.images[r][i];
                const auto& tj = b.images[r][j];
                if (ti.empty() && tj.empty()) continue;
                TermMap acc;
                auto put = [&](int power, int idx, Elem c) {
                    Elem& slot = acc[{power, idx}];
                    slot = f.add(slot, c);
                };
                for (const auto& t : ti) put(t.power, t.index * nb + j, t.coef);
                for (const auto& t : tj) put(t.power, i * nb + t.index, t.coef);
                for (const auto& s : ti)
                    for (const auto& t : tj) put(s.power + t.power, s.index * nb + t.index, f.mul(s.coef, t.coef));
                im[std::size_t(i) * nb + j] = flush(f, acc);
            }
    }
    return out;
}

// Spinors: basis e_S of the exterior algebra on v_1..v_l (S a bitmask),
// v_i acting by creation, v_{-i} by contraction and, for B, v_0 by the
// parity operator. A root matrix X acts through its Clifford image
// tau(X) = 1/2 sum_a X(e_a) e^a with e^a the J-dual basis.
NodeData spin_node(const NaturalModule& nat, int fundamental, const PrimeField& f,
                   const std::vector<std::vector<IntMatrix>>& series) {
    const FamilyRank& fr = nat.fr;
    const int l = fr.rank, d = nat.dim;
    const bool typeB = fr.family == Family::B;
    std::vector<int> masks, index(1 << l, -1);
    for (int m = 0; m < (1 << l); ++m) {
        int parity = __builtin_popcount(m) % 2;
        if (!typeB && parity != (fundamental == l ? l % 2 : (l - 1) % 2)) continue;
        index[m] = static_cast<int>(masks.size());
        masks.push_back(m);
    }
    NodeData out;
    for (int m : masks) {
        std::vector<int> e2(l);
        for (int i = 0; i < l; ++i) e2[i] = (m >> i) & 1 ? 1 : -1;
        out.weights.push_back(epsilon2_to_weight(fr, e2));
    }
    // gamma(basis vector b) applied to e_S: returns sign * e_{S'} or sign 0
    auto gamma = [&](int b, int mask, int& sign) {
        auto below = [&](int i) { return __builtin_popcount(mask & ((1 << i) - 1)); };
        if (b < l) {
            if (mask >> b & 1) { sign = 0; return mask; }
            sign = below(b) % 2 ? -1 : 1;
            return mask | (1 << b);
        }
        if (typeB && b == l) {
            sign = __builtin_popcount(mask) % 2 ? -1 : 1;
            return mask;
        }
        int i = d - 1 - b;
        if (!(mask >> i & 1)) { sign = 0; return mask; }
        sign = below(i) % 2 ? -1 : 1;
        return mask & ~(1 << i);
    };
    // J-dual of basis vector a, as (basis index, numerator, denominator)
    auto dual = [&](int a) -> std::pair<int, int> {
        if (typeB && a == l) return {l, 2};
        return {d - 1 - a, 1};
    };
    const int n = static_cast<int>(masks.size());
    const int nroots = static_cast<int>(series.size());
    out.images.assign(nroots, std::vector<std::vector<Term>>(n));
    for (int r = 0; r < nroots; ++r) {
        const IntMatrix& X = series[r][1];
        // 4 tau(X) with integer entries
        IntMatrix tau4(n, std::vector<long long>(n, 0));
        for (int a = 0; a < d; ++a) {
            auto [da, den] = dual(a);
            for (int b = 0; b < d; ++b) {
                if (!X[b][a]) continue;
                for (int col = 0; col < n; ++col) {
                    int s1, s2;
                    int m1 = gamma(da, masks[col], s1);
                    if (!s1) continue;
                    int m2 = gamma(b, m1, s2);
                    if (!s2) continue;
                    tau4[index.at(m2)][col] += (den == 1 ? 2 : 1) * X[b][a] * s1 * s2;
                }
            }
        }
        IntMatrix tau(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (tau4[i][j] % 4) throw Error("Mismatch", "spin root operator is not integral");
                tau[i][j] = tau4[i][j] / 4;
            }
        // x(t) - 1 = sum_{m>=1} t^m tau^m / m!
        IntMatrix power = tau;
        for (int m = 1;; ++m) {
            bool zero = true;
            for (int i = 0; i < n && zero; ++i)
                for (int j = 0; j < n; ++j)
                    if (power[i][j]) { zero = false; break; }
            if (zero) break;
            if (m > n) throw Error("Mismatch", "spin root operator is not nilpotent");
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i)
                    if (power[i][j]) {
                        if (f.from_int(power[i][j])) out.images[r][j].push_back({m, i, f.from_int(power[i][j])});
                    }
            power = int_multiply(power, tau);
            for (auto& row : power)
                for (auto& v : row) {
                    if (v % (m + 1)) throw Error("Mismatch", "spin divided power is not integral");
                    v /= m + 1;
                }
        }
    }
    return out;
}

NodeData build_node(const ModuleExpr& e, const NaturalModule& nat, const PrimeField& f,
                    const std::vector<std::vector<IntMatrix>>& series) {
    const int nroots = static_cast<int>(series.size());
    switch (e.kind) {
    case ModuleExpr::Natural: {
        NodeData d;
        d.weights = nat.weights;
        d.images.resize(nroots);
        for (int r = 0; r < nroots; ++r) {
            d.images[r].resize(nat.dim);
            for (int b = 0; b < nat.dim; ++b)
                for (size_t m = 1; m < series[r].size(); ++m)
                    for (int c = 0; c < nat.dim; ++c) {
                        long long v = series[r][m][c][b];
                        if (v && f.from_int(v)) d.images[r][b].push_back({int(m), c, f.from_int(v)});
                    }
        }
        return d;
    }
    case ModuleExpr::Dual: {
        NodeData c = build_node(*e.kids[0], nat, f, series);
        NodeData d;
        for (auto w : c.weights) {
            for (int& v : w) v = -v;
            d.weights.push_back(w);
        }
        d.images.assign(nroots, std::vector<std::vector<Term>>(c.weights.size()));
        for (int r = 0; r < nroots; ++r)
            for (size_t ci = 0; ci < c.weights.size(); ++ci)
                for (const auto& t : c.images[r][ci]) {
                    Elem coef = t.power % 2 ? f.neg(t.coef) : t.coef;
                    d.images[r][t.index].push_back({t.power, int(ci), coef});
                }
        return d;
    }
    case ModuleExpr::Wedge:
        return power_node(f, build_node(*e.kids[0], nat, f, series), e.k, true, nroots);
    case ModuleExpr::Sym:
        return power_node(f, build_node(*e.kids[0], nat, f, series), e.k, false, nroots);
    case ModuleExpr::Tensor:
        return tensor_node(f, build_node(*e.kids[0], nat, f, series), build_node(*e.kids[1], nat, f, series), nroots);
    case ModuleExpr::Spin:
        return spin_node(nat, e.k, f, series);
    }
    return {};
}

} // namespace

ExplicitModule::ExplicitModule(const FamilyRank& fr, const ModuleExprP& expr, const PrimeField& f,
                               const std::vector<RootVector>& roots)
    : f_(f), roots_(roots) {
    NaturalModule nat = NaturalModule::build(fr);
    std::vector<std::vector<IntMatrix>> series;
    for (const auto& r : roots) series.push_back(nat.root_element_series(r));
    NodeData d = build_node(*expr, nat, f, series);
    weights_ = std::move(d.weights);
    images_ = std::move(d.images);
}

int ExplicitModule::root_slot(const RootVector& beta) const {
    for (size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i] == beta) return static_cast<int>(i);
    throw Error("Mismatch", "root not prepared in this module");
}

} // namespace nu
