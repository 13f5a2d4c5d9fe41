#include "nu/unipotent.hpp"

#include "nu/construction.hpp"
#include "nu/dense.hpp"
#include "nu/irreducible.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace nu {

namespace {

// Stand-in for characteristic zero in explicit computations: larger than any
// block size that occurs, so no binomial coefficient in the divided powers
// of a unipotent block vanishes.
constexpr int kCharZeroPrime = 1000003;

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<int> clebsch_gordan(int m, int n) {
    std::vector<int> out;
    for (int k = m + n - 1; k >= std::abs(m - n) + 1; k -= 2) out.push_back(k);
    return out;
}

template <class Key, class Fn>
JordanType cached(std::map<Key, JordanType>& cache, std::mutex& mu, const Key& key, Fn compute) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    JordanType j = compute();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, j);
    return j;
}

std::vector<int> tensor_blocks(int m, int n, int p) {
    if (m == 1) return {n};
    if (n == 1) return {m};
    if (p == 0 || p >= m + n - 1) return clebsch_gordan(m, n);
    static std::map<std::tuple<int, int, int>, JordanType> cache;
    static std::mutex mu;
    auto key = std::make_tuple(std::min(m, n), std::max(m, n), p);
    return cached(cache, mu, key, [&] { return explicit_tensor_jordan({m}, {n}, p); }).blocks;
}

// Exterior and symmetric squares of a single block. In characteristic 0 (and
// for p >= 2n - 1, where every block stays below p) the block J_n is the
// SL2-module L(n-1) and the squares follow the classical plethysm.
std::vector<int> square_single(bool wedge, int n, int p) {
    if (n <= 1) return wedge ? std::vector<int>{} : std::vector<int>{1};
    if (wedge && p == 2) return gow_laffey_wedge2(n).blocks;
    if (p == 0 || (p != 2 && p >= 2 * n - 1)) {
        std::vector<int> out;
        const int m = n - 1;
        for (int top = wedge ? 2 * m - 2 : 2 * m; top >= 0; top -= 4) out.push_back(top + 1);
        return out;
    }
    static std::map<std::tuple<bool, int, int>, JordanType> cache;
    static std::mutex mu;
    return cached(cache, mu, std::make_tuple(wedge, n, p), [&] {
               return explicit_functor_jordan(wedge ? Functor::Wedge2 : Functor::Sym2, {n}, p);
           }).blocks;
}

JordanType square(bool wedge, const JordanType& a) {
    std::vector<int> out;
    const auto& b = a.blocks;
    for (size_t i = 0; i < b.size(); ++i) {
        out = concat(out, square_single(wedge, b[i], a.p));
        for (size_t j = i + 1; j < b.size(); ++j) out = concat(out, tensor_blocks(b[i], b[j], a.p));
    }
    return make_jordan(out, a.p);
}

template <class F>
JordanType jordan_of_unipotent(const F& f, Matrix<F> u, int p) {
    if (u.rows == 0) return make_jordan({}, p);
    return make_jordan(jordan_blocks(f, minus_identity(f, std::move(u), f.one())), p);
}

} // namespace

int JordanType::dim() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

JordanType make_jordan(std::vector<int> blocks, int p) {
    blocks.erase(std::remove(blocks.begin(), blocks.end(), 0), blocks.end());
    std::sort(blocks.rbegin(), blocks.rend());
    return JordanType{std::move(blocks), p};
}

std::string to_string(const JordanType& j) {
    // J3 + J2^4 + J1^4
    std::ostringstream os;
    for (size_t i = 0; i < j.blocks.size();) {
        size_t k = i;
        while (k < j.blocks.size() && j.blocks[k] == j.blocks[i]) ++k;
        if (i) os << " + ";
        os << "J" << j.blocks[i];
        if (k - i > 1) os << "^" << (k - i);
        i = k;
    }
    return j.blocks.empty() ? "0" : os.str();
}

int fixed_dim(const JordanType& j) { return static_cast<int>(j.blocks.size()); }

JordanType jordan_direct_sum(const JordanType& a, const JordanType& b) {
    if (a.p != b.p) throw Error("Mismatch", "Jordan types over different characteristics");
    return make_jordan(concat(a.blocks, b.blocks), a.p);
}

JordanType jordan_tensor(const JordanType& a, const JordanType& b) {
    if (a.p != b.p) throw Error("Mismatch", "Jordan types over different characteristics");
    std::vector<int> out;
    for (int m : a.blocks)
        for (int n : b.blocks) out = concat(out, tensor_blocks(m, n, a.p));
    return make_jordan(out, a.p);
}

JordanType jordan_wedge2(const JordanType& a) { return square(true, a); }
JordanType jordan_sym2(const JordanType& a) { return square(false, a); }

JordanType gow_laffey_wedge2(int i) {
    if (i <= 1) return make_jordan({}, 2);
    int q = 1;
    while (q < i) q *= 2;
    std::vector<int> out = gow_laffey_wedge2(q - i).blocks;
    for (int c = 0; c < i - q / 2 - 1; ++c) out.push_back(q);
    out.push_back(3 * q / 2 - i);
    return make_jordan(out, 2);
}

JordanType explicit_functor_jordan(Functor fn, const std::vector<int>& blocks, int p) {
    PrimeField f(p > 0 ? p : kCharZeroPrime);
    std::vector<Matrix<PrimeField>> parts;
    for (int b : blocks) parts.push_back(unipotent_block<PrimeField>(b));
    auto g = block_diagonal(parts);
    Matrix<PrimeField> m;
    switch (fn) {
    case Functor::Identity: m = g; break;
    case Functor::Wedge2: m = wedge_power(f, g, 2); break;
    case Functor::Wedge3: m = wedge_power(f, g, 3); break;
    case Functor::Sym2: m = sym_power(f, g, 2); break;
    case Functor::Sym3: m = sym_power(f, g, 3); break;
    case Functor::TensorSelf: m = kronecker(f, g, g); break;
    }
    return jordan_of_unipotent(f, std::move(m), p);
}

JordanType explicit_tensor_jordan(const std::vector<int>& a, const std::vector<int>& b, int p) {
    PrimeField f(p > 0 ? p : kCharZeroPrime);
    std::vector<Matrix<PrimeField>> pa, pb;
    for (int x : a) pa.push_back(unipotent_block<PrimeField>(x));
    for (int x : b) pb.push_back(unipotent_block<PrimeField>(x));
    return jordan_of_unipotent(f, kronecker(f, block_diagonal(pa), block_diagonal(pb)), p);
}

std::string to_string(const RootElementSpec& re) {
    return "x_alpha" + std::to_string(re.simple_index() + 1) + "(1)";
}

JordanType root_element_on_natural(const RootElementSpec& re, int p) {
    auto nat = NaturalModule::build(re.fr);
    RootVector beta(re.fr.rank, 0);
    beta[re.simple_index()] = 1;
    auto series = nat.root_element_series(beta);
    PrimeField f(p > 0 ? p : kCharZeroPrime);
    Matrix<PrimeField> u(nat.dim, nat.dim);
    for (const auto& term : series)
        for (int i = 0; i < nat.dim; ++i)
            for (int j = 0; j < nat.dim; ++j) u.at(i, j) = f.add(u.at(i, j), f.from_int(term[i][j]));
    return jordan_of_unipotent(f, std::move(u), p);
}

std::vector<RootElementSpec> root_element_representatives(const FamilyRank& fr) {
    std::vector<RootElementSpec> out{{fr, RootChoice::Alpha1}};
    if (fr.family == Family::B || fr.family == Family::C) out.push_back({fr, RootChoice::AlphaEll});
    return out;
}

long long filtration_bound(const std::vector<long long>& level_fixed_dims) {
    return std::accumulate(level_fixed_dims.begin(), level_fixed_dims.end(), 0LL);
}

JordanType jordan_from_weight_strings(const RootSystem&, const Character& ch, int i, int p) {
    // c[n] = total multiplicity of weights with <nu, alpha_i^vee> = n; an SL2
    // string with top pairing n contributes one block of size n + 1.
    std::map<int, long long> c;
    for (const auto& [nu, m] : ch.mult) c[nu[i]] += m;
    std::vector<int> out;
    for (const auto& [n, m] : c) {
        if (n < 0) continue;
        if (p > 0 && n >= p) throw Error("Unsupported", "weight strings longer than p do not determine the Jordan type");
        long long above = c.count(n + 2) ? c.at(n + 2) : 0;
        for (long long k = 0; k < m - above; ++k) out.push_back(n + 1);
    }
    return make_jordan(out, p);
}

UnipotentMax max_fixed_space_unipotent(const ModuleSpec& spec) {
    auto irr = Irreducible::get(spec.fr, spec.highest, spec.p);
    UnipotentMax best;
    bool first = true;
    for (const auto& re : root_element_representatives(spec.fr)) {
        JordanType j = irr->root_element_jordan(re.simple_index());
        long long v = fixed_dim(j);
        if (first || v > best.value) {
            best.value = v;
            best.witness = re;
            best.jordan = j;
            first = false;
        }
    }
    best.method = to_string(irr->source());
    return best;
}

} // namespace nu
