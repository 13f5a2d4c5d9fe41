#include "nu/oracle.hpp"

#include "nu/dense.hpp"
#include "nu/irreducible.hpp"
#include "nu/pattern.hpp"
#include "nu/unipotent.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace nu {

namespace {

using IntMatrix = std::vector<std::vector<long long>>;
using Mat = Matrix<GaloisField>;

constexpr long long kMaxConstruction = 3000;

long long mod(long long a, long long m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// In characteristic p the p-part of a torus element is trivial: zeta_M^x
// becomes z^(x / p^a) for z of order m, where M = p^a m with p not dividing m.
struct PPrime {
    long long m = 1;
    long long scale = 1;  // inverse of p^a modulo m

    PPrime(long long M, int p) : m(M) {
        long long pa = 1;
        while (p > 0 && m % p == 0) {
            m /= p;
            pa *= p;
        }
        for (long long c = 0; c < m; ++c)
            if ((pa % m) * c % m == 1 % m) {
                scale = c;
                break;
            }
    }
    // exponent of zeta_M^x
    long long reduce(long long x) const { return mod(mod(x, m) * scale, m); }
    // exponent of zeta_{2M}^k, k even
    long long reduce_doubled(long long k) const {
        if (k % 2 != 0) throw Error("Unsupported", "odd eigen exponent needs a spin lift");
        return reduce(k / 2);
    }
};

// The natural module with signed basis labels: for B, C, D the basis is
// e_1..e_l, (e_0), e_-l..e_-1 and the Gram matrix pairs e_k with e_-k.
struct Natural {
    FamilyRank fr;
    int n = 0;
    std::vector<int> label;           // signed index of each basis vector, 0 for e_0
    std::vector<std::vector<int>> eps;  // epsilon coordinates of each basis vector
    IntMatrix gram;                   // empty for A

    int index(int signed_label) const {
        for (int i = 0; i < n; ++i)
            if (label[i] == signed_label) return i;
        throw Error("Mismatch", "no basis vector e_" + std::to_string(signed_label));
    }
};

Natural build_natural(const FamilyRank& fr) {
    Natural nat;
    nat.fr = fr;
    const int l = fr.rank;
    if (fr.family == Family::A) {
        nat.n = l + 1;
        for (int i = 1; i <= l + 1; ++i) {
            nat.label.push_back(i);
            std::vector<int> e(l + 1, 0);
            e[i - 1] = 1;
            nat.eps.push_back(e);
        }
        return nat;
    }
    for (int k = 1; k <= l; ++k) nat.label.push_back(k);
    if (fr.family == Family::B) nat.label.push_back(0);
    for (int k = l; k >= 1; --k) nat.label.push_back(-k);
    nat.n = static_cast<int>(nat.label.size());
    for (int s : nat.label) {
        std::vector<int> e(l, 0);
        if (s > 0) e[s - 1] = 1;
        if (s < 0) e[-s - 1] = -1;
        nat.eps.push_back(e);
    }
    nat.gram.assign(nat.n, std::vector<long long>(nat.n, 0));
    for (int i = 0; i < nat.n; ++i) {
        int s = nat.label[i];
        if (s == 0) {
            nat.gram[i][i] = 2;
            continue;
        }
        int j = nat.index(-s);
        nat.gram[i][j] = (fr.family == Family::C && s < 0) ? -1 : 1;
    }
    return nat;
}

IntMatrix zero_int(int n) { return IntMatrix(n, std::vector<long long>(n, 0)); }

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    const int n = static_cast<int>(a.size());
    IntMatrix c = zero_int(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k])
                for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

IntMatrix int_transpose(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    IntMatrix t = zero_int(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[j][i] = a[i][j];
    return t;
}

bool is_zero(const IntMatrix& a) {
    for (const auto& row : a)
        for (long long v : row)
            if (v) return false;
    return true;
}

// Root vector X_beta on the natural module. beta is given as a list of signed
// labels: {u, v} for eps_u + eps_v, {u, u} for 2 eps_u, {u} for eps_u (B),
// and for A {i, -j} for eps_i - eps_j.
IntMatrix root_vector(const Natural& nat, const std::vector<int>& beta) {
    IntMatrix x = zero_int(nat.n);
    if (nat.fr.family == Family::A) {
        x[nat.index(beta[0])][nat.index(-beta[1])] = 1;
        return x;
    }
    auto J = [&](int a, int b) { return nat.gram[nat.index(a)][nat.index(b)]; };
    if (beta.size() == 1) {
        int u = beta[0];
        x[nat.index(u)][nat.index(0)] = 2;
        x[nat.index(0)][nat.index(-u)] = -1;
    } else if (beta[0] == beta[1]) {
        int u = beta[0];
        x[nat.index(u)][nat.index(-u)] = 1;
    } else {
        int u = beta[0], v = beta[1];
        x[nat.index(u)][nat.index(-v)] = 1;
        long long num = -J(u, -u), den = J(-v, v);
        if (num % den != 0) throw Error("Mismatch", "non-integral root vector");
        x[nat.index(v)][nat.index(-u)] = num / den;
    }
    // X lies in the Lie algebra of the form: X^T J + J X = 0
    IntMatrix t = int_mul(int_transpose(x), nat.gram), s = int_mul(nat.gram, x);
    for (int i = 0; i < nat.n; ++i)
        for (int j = 0; j < nat.n; ++j)
            if (t[i][j] + s[i][j] != 0) throw Error("Mismatch", "root vector does not preserve the form");
    return x;
}

// x_beta(t) = 1 + tX + t^2 X^2 / 2 as an integer matrix (X^3 = 0 here).
IntMatrix root_element(const Natural& nat, const std::vector<int>& beta, long long t) {
    IntMatrix x = root_vector(nat, beta);
    IntMatrix x2 = int_mul(x, x);
    if (!is_zero(int_mul(x2, x))) throw Error("Mismatch", "root vector with X^3 != 0");
    IntMatrix g = zero_int(nat.n);
    for (int i = 0; i < nat.n; ++i)
        for (int j = 0; j < nat.n; ++j) {
            if (x2[i][j] % 2 != 0) throw Error("Mismatch", "X^2/2 not integral");
            g[i][j] = (i == j) + t * x[i][j] + t * t * (x2[i][j] / 2);
        }
    return g;
}

std::vector<int> simple_root_labels(const FamilyRank& fr, int i, bool negative) {
    const int l = fr.rank;
    std::vector<int> beta;
    if (i + 1 < l || fr.family == Family::A) {
        beta = {i + 1, -(i + 2)};
    } else {
        switch (fr.family) {
        case Family::B: beta = {l}; break;
        case Family::C: beta = {l, l}; break;
        case Family::D: beta = {l - 1, l}; break;
        case Family::A: break;
        }
    }
    if (negative) {
        if (fr.family == Family::A) return {beta[1] * -1, beta[0] * -1};
        for (int& b : beta) b = -b;
    }
    return beta;
}

Mat to_field(const GaloisField& f, const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = f.from_int(a[i][j]);
    return m;
}

// The construction applied to a natural-module matrix g (with inverse gi,
// needed for the dual factor), together with basis weights.
struct Realised {
    Mat rho;
    std::vector<std::vector<int>> weights;
};

std::vector<std::vector<int>> sum_weights(const Natural& nat, const std::vector<std::vector<int>>& sets) {
    std::vector<std::vector<int>> out;
    for (const auto& s : sets) {
        std::vector<int> w(nat.eps[0].size(), 0);
        for (int i : s)
            for (size_t k = 0; k < w.size(); ++k) w[k] += nat.eps[i][k];
        out.push_back(w);
    }
    return out;
}

Realised realise(const GaloisField& f, const Natural& nat, const Construction& c, const Mat& g, const Mat& gi) {
    Realised r;
    switch (c.kind) {
    case Construction::Wedge:
        r.rho = c.k == 1 ? g : wedge_power(f, g, c.k);
        r.weights = sum_weights(nat, subsets(nat.n, c.k, false));
        break;
    case Construction::Sym:
        r.rho = sym_power(f, g, c.k);
        r.weights = sum_weights(nat, subsets(nat.n, c.k, true));
        break;
    case Construction::TensorNatDual: {
        Mat git(gi.cols, gi.rows);
        for (int i = 0; i < gi.rows; ++i)
            for (int j = 0; j < gi.cols; ++j) git.at(j, i) = gi.at(i, j);
        r.rho = kronecker(f, g, git);
        for (int a = 0; a < nat.n; ++a)
            for (int b = 0; b < nat.n; ++b) {
                auto w = nat.eps[a];
                for (size_t k = 0; k < w.size(); ++k) w[k] -= nat.eps[b][k];
                r.weights.push_back(w);
            }
        break;
    }
    case Construction::TensorNatWedge: {
        r.rho = kronecker(f, g, wedge_power(f, g, c.k));
        auto inner = sum_weights(nat, subsets(nat.n, c.k, false));
        for (int a = 0; a < nat.n; ++a)
            for (const auto& w0 : inner) {
                auto w = nat.eps[a];
                for (size_t k = 0; k < w.size(); ++k) w[k] += w0[k];
                r.weights.push_back(w);
            }
        break;
    }
    }
    return r;
}

Weight eps_to_fundamental(const FamilyRank& fr, const std::vector<int>& x) {
    const int l = fr.rank;
    Weight w(l);
    for (int i = 0; i + 1 < l; ++i) w[i] = x[i] - x[i + 1];
    switch (fr.family) {
    case Family::A: w[l - 1] = x[l - 1] - x[l]; break;
    case Family::B: w[l - 1] = 2 * x[l - 1]; break;
    case Family::C: w[l - 1] = x[l - 1]; break;
    case Family::D: w[l - 1] = x[l - 2] + x[l - 1]; break;
    }
    return w;
}

std::vector<int> top_eps(const FamilyRank& fr, const Construction& c) {
    const int n = natural_coords(fr);
    std::vector<int> x(n, 0);
    switch (c.kind) {
    case Construction::Wedge:
        for (int i = 0; i < c.k; ++i) x[i] = 1;
        break;
    case Construction::Sym: x[0] = c.k; break;
    case Construction::TensorNatDual:
        x[0] = 1;
        if (fr.family != Family::A) throw Error("Unsupported", "tensor_nat_dual is only used for type A");
        x[n - 1] = -1;
        break;
    case Construction::TensorNatWedge:
        for (int i = 0; i < c.k; ++i) x[i] = 1;
        x[0] += 1;
        break;
    }
    return x;
}

using SparseVec = std::vector<std::pair<int, Elem>>;

// Columns of a dense matrix as sparse vectors.
std::vector<SparseVec> sparse_columns(const Mat& m) {
    std::vector<SparseVec> cols(m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j)) cols[j].emplace_back(i, m.at(i, j));
    return cols;
}

// Span closure of a weight vector under operators that map weight vectors
// to sums of weight vectors; the images are split into weight components,
// so every stored vector is homogeneous and elimination stays inside one
// weight space. Returns a basis of the closure.
class WeightClosure {
public:
    WeightClosure(const GaloisField& f, const std::vector<std::vector<int>>& weights) : f_(f), weights_(weights) {}

    std::vector<std::vector<Elem>> run(int start, const std::vector<std::vector<SparseVec>>& ops) {
        std::vector<Elem> v(weights_.size(), 0);
        v[start] = 1;
        std::vector<std::vector<Elem>> queue;
        if (insert(v)) queue.push_back(v);
        while (!queue.empty()) {
            auto cur = std::move(queue.back());
            queue.pop_back();
            for (const auto& op : ops) {
                std::vector<Elem> img(weights_.size(), 0);
                bool any = false;
                for (size_t j = 0; j < cur.size(); ++j) {
                    if (!cur[j]) continue;
                    for (const auto& [i, x] : op[j]) {
                        img[i] = f_.add(img[i], f_.mul(x, cur[j]));
                        any = true;
                    }
                }
                if (!any) continue;
                std::map<std::vector<int>, std::vector<Elem>> parts;
                for (size_t i = 0; i < img.size(); ++i)
                    if (img[i]) {
                        auto& part = parts[weights_[i]];
                        if (part.empty()) part.assign(img.size(), 0);
                        part[i] = img[i];
                    }
                for (auto& [w, part] : parts)
                    if (insert(part)) queue.push_back(std::move(part));
            }
        }
        std::vector<std::vector<Elem>> basis;
        for (auto& [w, rows] : spaces_)
            for (auto& r : rows) basis.push_back(r.second);
        return basis;
    }

private:
    // Echelon form per weight space; keeps the unreduced vector for the basis.
    bool insert(const std::vector<Elem>& v) {
        int first = -1;
        for (size_t i = 0; i < v.size() && first < 0; ++i)
            if (v[i]) first = static_cast<int>(i);
        if (first < 0) return false;
        auto& rows = spaces_[weights_[first]];
        std::vector<Elem> r = v;
        for (const auto& [piv, row] : reduced_[weights_[first]]) {
            if (!r[piv]) continue;
            Elem s = r[piv];
            for (size_t i = 0; i < r.size(); ++i)
                if (row[i]) r[i] = f_.sub(r[i], f_.mul(s, row[i]));
        }
        int piv = -1;
        for (size_t i = 0; i < r.size() && piv < 0; ++i)
            if (r[i]) piv = static_cast<int>(i);
        if (piv < 0) return false;
        Elem inv = f_.inv(r[piv]);
        for (auto& x : r) x = f_.mul(x, inv);
        auto& red = reduced_[weights_[first]];
        for (auto& [p2, row] : red)
            if (row[piv]) {
                Elem s = row[piv];
                for (size_t i = 0; i < row.size(); ++i)
                    if (r[i]) row[i] = f_.sub(row[i], f_.mul(s, r[i]));
            }
        red.emplace_back(piv, r);
        rows.emplace_back(piv, v);
        return true;
    }

    const GaloisField& f_;
    const std::vector<std::vector<int>>& weights_;
    std::map<std::vector<int>, std::vector<std::pair<int, std::vector<Elem>>>> spaces_;
    std::map<std::vector<int>, std::vector<std::pair<int, std::vector<Elem>>>> reduced_;
};

struct PairedModel {
    std::vector<std::vector<Elem>> N, M;  // bases in X and X*
    long long construction_dim = 0;
    long long irreducible_dim = 0;
};

Mat dual_of(const Mat& rho_inverse) {
    Mat t(rho_inverse.cols, rho_inverse.rows);
    for (int i = 0; i < rho_inverse.rows; ++i)
        for (int j = 0; j < rho_inverse.cols; ++j) t.at(j, i) = rho_inverse.at(i, j);
    return t;
}

// rank of C^T Y where the columns of Y are given
int pairing_rank(const GaloisField& f, const std::vector<std::vector<Elem>>& C, const std::vector<std::vector<Elem>>& Y) {
    Mat p(static_cast<int>(C.size()), static_cast<int>(Y.size()));
    std::vector<SparseVec> cs;
    for (const auto& c : C) {
        SparseVec s;
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i]) s.emplace_back(static_cast<int>(i), c[i]);
        cs.push_back(std::move(s));
    }
    for (size_t a = 0; a < cs.size(); ++a)
        for (size_t b = 0; b < Y.size(); ++b) {
            Elem acc = 0;
            for (const auto& [i, x] : cs[a])
                if (Y[b][i]) acc = f.add(acc, f.mul(x, Y[b][i]));
            p.at(static_cast<int>(a), static_cast<int>(b)) = acc;
        }
    return rank(f, p);
}

PairedModel build_paired(const GaloisField& f, const Natural& nat, const Construction& c) {
    const FamilyRank& fr = nat.fr;
    std::vector<std::vector<SparseVec>> lower, raise;
    std::vector<std::vector<int>> weights;
    for (int i = 0; i < fr.rank; ++i)
        for (bool negative : {true, false}) {
            auto beta = simple_root_labels(fr, i, negative);
            Mat g = to_field(f, root_element(nat, beta, 1));
            Mat gi = to_field(f, root_element(nat, beta, -1));
            Realised r = realise(f, nat, c, g, gi);
            Realised ri = realise(f, nat, c, gi, g);
            weights = r.weights;
            if (negative)
                lower.push_back(sparse_columns(r.rho));
            else
                raise.push_back(sparse_columns(dual_of(ri.rho)));
        }
    const auto top = top_eps(fr, c);
    std::vector<int> hits;
    auto same = [&](const std::vector<int>& a, const std::vector<int>& b) {
        if (fr.family != Family::A) return a == b;
        // type A weights are defined modulo the all-ones vector
        for (size_t k = 1; k < a.size(); ++k)
            if (a[k] - a[0] != b[k] - b[0]) return false;
        return true;
    };
    for (size_t i = 0; i < weights.size(); ++i)
        if (same(weights[i], top)) hits.push_back(static_cast<int>(i));
    if (hits.size() != 1) throw Error("Mismatch", "highest weight of " + c.name() + " is not a single basis vector");

    PairedModel pm;
    pm.construction_dim = static_cast<long long>(weights.size());
    pm.N = WeightClosure(f, weights).run(hits[0], lower);
    std::vector<std::vector<int>> dual_weights;
    for (auto w : weights) {
        for (int& x : w) x = -x;
        dual_weights.push_back(w);
    }
    pm.M = WeightClosure(f, dual_weights).run(hits[0], raise);
    pm.irreducible_dim = pairing_rank(f, pm.M, pm.N);
    return pm;
}

long long eigenspace_once(const GaloisField& f, int p, const FamilyRank& fr, const Construction& c, const OracleElement& e,
                          ModelStats* stats) {
    Natural nat = build_natural(fr);
    PairedModel pm = build_paired(f, nat, c);
    const int dim = static_cast<int>(pm.construction_dim);
    std::vector<std::vector<Elem>> Y;
    if (e.kind == OracleElement::Torus) {
        const TorusClass& s = e.torus;
        const PPrime pp(s.M, p);
        Elem z = element_of_order(f, static_cast<std::uint64_t>(pp.m));
        Mat g(nat.n, nat.n), gi(nat.n, nat.n);
        for (int i = 0; i < nat.n; ++i) {
            int lab = nat.label[i];
            long long ex = 0;
            if (fr.family == Family::A) ex = s.t[lab - 1];
            else if (lab > 0) ex = s.t[lab - 1];
            else if (lab < 0) ex = -s.t[-lab - 1];
            g.at(i, i) = f.pow(z, pp.reduce(ex));
            gi.at(i, i) = f.pow(z, pp.reduce(-ex));
        }
        Realised r = realise(f, nat, c, g, gi);
        Elem mu = f.pow(z, pp.reduce_doubled(e.eigen_exponent));
        for (const auto& b : pm.N) {
            std::vector<Elem> y(dim, 0);
            for (int i = 0; i < dim; ++i)
                if (b[i]) y[i] = f.mul(f.sub(r.rho.at(i, i), mu), b[i]);
            Y.push_back(std::move(y));
        }
    } else {
        auto beta = simple_root_labels(fr, e.simple_index, false);
        Mat g = to_field(f, root_element(nat, beta, 1));
        Mat gi = to_field(f, root_element(nat, beta, -1));
        Realised r = realise(f, nat, c, g, gi);
        auto cols = sparse_columns(r.rho);
        for (const auto& b : pm.N) {
            std::vector<Elem> y(dim, 0);
            for (int j = 0; j < dim; ++j) {
                if (!b[j]) continue;
                for (const auto& [i, x] : cols[j]) y[i] = f.add(y[i], f.mul(x, b[j]));
            }
            for (int j = 0; j < dim; ++j) y[j] = f.sub(y[j], b[j]);
            Y.push_back(std::move(y));
        }
    }
    if (stats) {
        stats->construction_dim = pm.construction_dim;
        stats->irreducible_dim = pm.irreducible_dim;
        stats->field_order = f.order();
    }
    return pm.irreducible_dim - pairing_rank(f, pm.M, Y);
}

std::mutex field_mu;
std::map<std::pair<int, long long>, std::shared_ptr<GaloisField>> field_cache;

std::shared_ptr<GaloisField> cached_field(int p, long long M, int which) {
    std::pair<int, long long> key{p == 0 ? -1 - which : p, M};
    {
        std::lock_guard<std::mutex> lock(field_mu);
        auto it = field_cache.find(key);
        if (it != field_cache.end()) return it->second;
    }
    std::shared_ptr<GaloisField> f(oracle_field(p, M, which).release());
    std::lock_guard<std::mutex> lock(field_mu);
    field_cache.emplace(key, f);
    return f;
}

} // namespace

Construction Construction::parse(const std::string& s) {
    Construction c;
    auto number = [&](const std::string& rest) {
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
            throw Error("ParseError", "bad construction '" + s + "'");
        return std::stoi(rest);
    };
    if (s == "natural") {
        c.kind = Wedge;
        c.k = 1;
    } else if (s == "tensor_nat_dual") {
        c.kind = TensorNatDual;
    } else if (s.rfind("nat_wedge", 0) == 0) {
        c.kind = TensorNatWedge;
        c.k = number(s.substr(9));
    } else if (s.rfind("wedge", 0) == 0) {
        c.kind = Wedge;
        c.k = number(s.substr(5));
    } else if (s.rfind("sym", 0) == 0) {
        c.kind = Sym;
        c.k = number(s.substr(3));
    } else {
        throw Error("ParseError", "unknown construction '" + s + "'");
    }
    if (c.k < 1) throw Error("ParseError", "bad construction '" + s + "'");
    return c;
}

std::string Construction::name() const {
    switch (kind) {
    case Wedge: return k == 1 ? "natural" : "wedge" + std::to_string(k);
    case Sym: return "sym" + std::to_string(k);
    case TensorNatDual: return "tensor_nat_dual";
    case TensorNatWedge: return "nat_wedge" + std::to_string(k);
    }
    return "?";
}

Weight construction_highest_weight(const FamilyRank& fr, const Construction& c) {
    return eps_to_fundamental(fr, top_eps(fr, c));
}

long long construction_dim(const FamilyRank& fr, const Construction& c) {
    const long long n = build_natural(fr).n;
    auto binom = [](long long a, long long b) {
        long long r = 1;
        for (long long j = 1; j <= b; ++j) r = r * (a - b + j) / j;
        return b < 0 || b > a ? 0 : r;
    };
    switch (c.kind) {
    case Construction::Wedge: return binom(n, c.k);
    case Construction::Sym: return binom(n + c.k - 1, c.k);
    case Construction::TensorNatDual: return n * n;
    case Construction::TensorNatWedge: return n * binom(n, c.k);
    }
    return 0;
}

std::unique_ptr<GaloisField> oracle_field(int p, long long M, int which) {
    if (M < 1) throw Error("FieldUnavailable", "bad element order");
    if (p > 0) {
        if (M % p == 0) throw Error("FieldUnavailable", "order divisible by the characteristic");
        std::uint64_t q = p;
        for (int k = 1; q <= (1u << 22); ++k, q *= p)
            if (q >= 64 && (q - 1) % M == 0) return std::make_unique<GaloisField>(p, k);
        throw Error("FieldUnavailable", "no small field of characteristic " + std::to_string(p) +
                                            " with roots of unity of order " + std::to_string(M));
    }
    int seen = 0;
    for (long long q = ((1LL << 20) / M + 1) * M + 1; q < (1LL << 24); q += M)
        if (is_prime(q) && seen++ == which) return std::make_unique<GaloisField>(static_cast<std::uint32_t>(q), 1);
    throw Error("FieldUnavailable", "no prime field with roots of unity of order " + std::to_string(M));
}

long long oracle_eigenspace_dim(const FamilyRank& fr, const Construction& c, int p, const OracleElement& e,
                                ModelStats* stats) {
    validate(fr);
    if (fr.family == Family::B && p == 2) throw Error("Unsupported", "type B in characteristic 2 goes through type C");
    if (construction_dim(fr, c) > kMaxConstruction) throw Error("TooLarge", c.name() + " exceeds the oracle cap");
    const long long M = e.kind == OracleElement::Torus ? PPrime(e.torus.M, p).m : 1;
    if (p > 0) return eigenspace_once(*cached_field(p, M, 0), p, fr, c, e, stats);
    long long a = eigenspace_once(*cached_field(0, M, 0), 0, fr, c, e, stats);
    long long b = eigenspace_once(*cached_field(0, M, 1), 0, fr, c, e, nullptr);
    if (a != b) throw Error("Mismatch", "the two characteristic-zero primes disagree");
    return a;
}

int oracle_check_generators(const FamilyRank& fr, int p) {
    validate(fr);
    Natural nat = build_natural(fr);
    auto f = cached_field(p, 1, 0);
    int checked = 0;
    for (int i = 0; i < fr.rank; ++i)
        for (bool negative : {true, false}) {
            auto beta = simple_root_labels(fr, i, negative);
            IntMatrix g = root_element(nat, beta, 1);
            if (!nat.gram.empty()) {
                IntMatrix lhs = int_mul(int_transpose(g), int_mul(nat.gram, g));
                if (lhs != nat.gram) throw Error("Mismatch", "generator does not preserve the form");
            }
            // unipotent: (g - 1)^n = 0 over the field
            Mat u = to_field(*f, g);
            for (int k = 0; k < u.rows; ++k) u.at(k, k) = f->sub(u.at(k, k), f->one());
            Mat pw = u;
            for (int k = 1; k < u.rows; ++k) pw = multiply(*f, pw, u);
            for (Elem x : pw.a)
                if (x) throw Error("Mismatch", "generator is not unipotent");
            ++checked;
        }
    return checked;
}

long long oracle_generic_order(int p) {
    if (p == 0) return kGenericOrder;
    for (long long g = 29; g < 5000; ++g) {
        if (!is_prime(g) || g == p) continue;
        bool ok = true;
        for (const auto& w : standard_witnesses()) {
            if (!w.cond.matches(p)) continue;
            for (int l = std::max(1, w.ranks.lo); l <= w.ranks.lo + 6 && ok; ++l) {
                auto env = lp_env(l, p);
                env["G"] = g;
                long long M = static_cast<long long>(w.M.eval_int(env));
                if (M % p == 0) continue;
                try {
                    oracle_field(p, M);
                } catch (const Error&) {
                    ok = false;
                }
            }
            if (!ok) break;
        }
        if (ok) return g;
    }
    throw Error("FieldUnavailable", "no generic order for characteristic " + std::to_string(p));
}

std::vector<OracleCase> load_oracle_cases(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open oracle cases " + path);
    std::vector<OracleCase> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream is(t);
        std::string id, fam, rank, cons, ch, extra;
        if (!(is >> id >> fam >> rank >> cons >> ch) || (is >> extra))
            throw Error("ParseError", path + ":" + std::to_string(lineno) + ": expected ID FAMILY RANK CONSTRUCTION CHAR");
        OracleCase c;
        c.id = id;
        c.fr = FamilyRank{parse_family(fam), std::stoi(rank)};
        c.construction = Construction::parse(cons);
        c.p = std::stoi(ch);
        c.line = lineno;
        validate(c.fr);
        for (const auto& o : out)
            if (o.id == id) throw Error("ParseError", path + ":" + std::to_string(lineno) + ": duplicate id " + id);
        out.push_back(c);
    }
    return out;
}

const std::vector<OracleCase>& standard_oracle_cases() {
    static const std::vector<OracleCase> cases = load_oracle_cases(data_dir() + "/oracle_cases.txt");
    return cases;
}

const OracleCase& find_oracle_case(const std::string& id) {
    for (const auto& c : standard_oracle_cases())
        if (c.id == id) return c;
    throw Error("NotFound", "no oracle case '" + id + "'");
}

bool OracleReport::passed() const {
    if (!error.empty() || formula_dim != oracle_dim) return false;
    return std::all_of(rows.begin(), rows.end(), [](const OracleComparison& r) { return r.ok(); });
}

// Eigenvalue multiplicities of a torus element in characteristic p, keyed
// by the eigen exponent of one representative of each merged class.
std::map<long long, long long> merged_eigen(const Character& ch, const TorusClass& s, int p) {
    auto eig = eigen_multiset(ch, s);
    if (p == 0 || s.M % p != 0) return eig;
    PPrime pp(s.M, p);
    std::map<long long, long long> by_class, rep, out;
    for (const auto& [k, m] : eig) {
        long long c = pp.reduce_doubled(k);
        by_class[c] += m;
        rep.emplace(c, k);
    }
    for (const auto& [c, m] : by_class) out[rep.at(c)] = m;
    return out;
}

std::vector<OracleElement> oracle_elements(const ModuleSpec& spec) {
    std::vector<OracleElement> out;
    auto irr = Irreducible::get(spec.fr, spec.highest, spec.p);
    const long long g = oracle_generic_order(spec.p);
    auto add_torus = [&](const TorusClass& s, const std::string& label) {
        auto eig = merged_eigen(irr->character(), s, spec.p);
        std::vector<std::pair<long long, long long>> byMass;
        for (const auto& [k, m] : eig) byMass.emplace_back(m, k);
        std::sort(byMass.rbegin(), byMass.rend());
        // the largest eigenspaces and the eigenvalue 1
        std::vector<long long> ks;
        for (size_t i = 0; i < byMass.size() && i < 3; ++i) ks.push_back(byMass[i].second);
        if (eig.count(0) && std::find(ks.begin(), ks.end(), 0) == ks.end()) ks.push_back(0);
        for (long long k : ks) {
            OracleElement e;
            e.kind = OracleElement::Torus;
            e.torus = s;
            e.eigen_exponent = k;
            e.label = label + " " + s.describe() + " mu=zeta_" + std::to_string(2 * s.M) + "^" + std::to_string(k);
            out.push_back(e);
        }
    };
    for (const auto& w : standard_witnesses()) {
        if (!w.matches(spec)) continue;
        TorusClass s = w.instantiate(spec.fr.rank, spec.p, g);
        if (spec.p > 0 && s.M % spec.p == 0) continue;
        if (is_central(s)) continue;
        add_torus(s, "witness:" + std::to_string(w.line));
    }
    SearchConfig sweep_only;
    auto best = max_eigenspace_on_character(spec, irr->character(), sweep_only);
    if (best.origin.rfind("sweep", 0) == 0) add_torus(best.witness, best.origin);
    for (const auto& re : root_element_representatives(spec.fr)) {
        OracleElement e;
        e.kind = OracleElement::Root;
        e.simple_index = re.simple_index();
        e.label = to_string(re);
        out.push_back(e);
    }
    return out;
}

OracleReport cross_check(const OracleCase& c) {
    OracleReport rep;
    rep.case_id = c.id;
    try {
        rep.spec = ModuleSpec{c.fr, construction_highest_weight(c.fr, c.construction), c.p};
        if (!is_restricted(rep.spec.highest, c.p)) throw Error("NotRestricted", "highest weight is not restricted");
        rep.construction_dim = construction_dim(c.fr, c.construction);
        auto irr = Irreducible::get(c.fr, rep.spec.highest, c.p);
        rep.formula_dim = irr->dim();
        bool have_dim = false;
        for (const auto& e : oracle_elements(rep.spec)) {
            OracleComparison row;
            row.case_id = c.id;
            row.element = e.label;
            if (e.kind == OracleElement::Torus) {
                auto eig = merged_eigen(irr->character(), e.torus, c.p);
                row.formula = eig.count(e.eigen_exponent) ? eig.at(e.eigen_exponent) : 0;
            } else {
                row.formula = fixed_dim(irr->root_element_jordan(e.simple_index));
            }
            ModelStats stats;
            row.oracle = oracle_eigenspace_dim(c.fr, c.construction, c.p, e, &stats);
            if (!have_dim) {
                rep.oracle_dim = stats.irreducible_dim;
                have_dim = true;
            }
            rep.rows.push_back(row);
        }
    } catch (const Error& e) {
        rep.error = e.what();
    }
    return rep;
}

std::vector<OracleReport> cross_check(const std::vector<OracleCase>& cases, int threads) {
    std::vector<OracleReport> out(cases.size());
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next++) < cases.size();) out[i] = cross_check(cases[i]);
        });
    for (auto& th : pool) th.join();
    return out;
}

} // namespace nu
