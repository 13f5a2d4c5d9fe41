#include "nu/semisimple.hpp"

#include "nu/irreducible.hpp"

#include <fstream>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace nu {

namespace {

long long mod(long long a, long long m) {
    a %= m;
    return a < 0 ? a + m : a;
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int r = 2; r <= n; ++r)
        if (is_prime(r)) out.push_back(r);
    return out;
}

// Distinct weights of a character with lambda - nu over the simple roots.
struct WeightTable {
    std::vector<Weight> weights;
    std::vector<long long> mult;
    std::vector<std::vector<int>> depth;  // lambda - nu over the simple roots
};

WeightTable weight_table(const RootSystem& rs, const Weight& lambda, const Character& ch) {
    WeightTable t;
    for (const auto& [nu, m] : ch.mult) {
        auto c = root_cone_difference(rs, lambda, nu);
        if (!c) throw Error("MalformedCharacter", weight_to_string(nu) + " is not below the highest weight");
        t.weights.push_back(nu);
        t.mult.push_back(m);
        t.depth.push_back(*c);
    }
    return t;
}

// Largest fibre of nu -> sum_j a_j depth_j(nu) mod r; returns (mass, value).
std::pair<long long, long long> largest_fibre(const WeightTable& t, const std::vector<long long>& a, long long r,
                                              std::vector<long long>& hist) {
    hist.assign(r, 0);
    const size_t l = a.size();
    for (size_t w = 0; w < t.weights.size(); ++w) {
        long long v = 0;
        const auto& c = t.depth[w];
        for (size_t j = 0; j < l; ++j) v += a[j] * c[j];
        hist[mod(v, r)] += t.mult[w];
    }
    long long best = -1, at = 0;
    for (long long v = 0; v < r; ++v)
        if (hist[v] > best) {
            best = hist[v];
            at = v;
        }
    return {best, at};
}

// Multisets of size n over values 0..V-1, as count vectors. `keep` prunes a
// partial count vector (values 0..k assigned).
void multisets(int V, int n, const std::function<bool(const std::vector<int>&, int)>& keep,
               const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> counts(V, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == V - 1) {
            counts[v] = left;
            if (keep(counts, v)) visit(counts);
            counts[v] = 0;
            return;
        }
        for (int c = left; c >= 0; --c) {
            counts[v] = c;
            if (keep(counts, v)) rec(v + 1, left - c);
        }
        counts[v] = 0;
    };
    rec(0, n);
}

// Root values a_j = theta . alpha_j for theta in epsilon coordinates.
std::vector<long long> theta_to_roots(const std::vector<std::vector<int>>& simple_eps, const std::vector<long long>& theta,
                                      long long r) {
    std::vector<long long> a;
    for (const auto& alpha : simple_eps) {
        long long v = 0;
        for (size_t k = 0; k < alpha.size(); ++k) v += alpha[k] * theta[k];
        a.push_back(mod(v, r));
    }
    return a;
}

// Calls visit(a) for one representative a of every nonzero homomorphism
// Q -> Z/r up to the Weyl group and scaling by units (representatives may
// repeat). Small cases are enumerated directly.
void sweep_prime(const FamilyRank& fr, long long r, long long cap,
                 const std::function<void(const std::vector<long long>&)>& visit) {
    const int l = fr.rank;
    long long visited = 0;
    auto emit = [&](const std::vector<long long>& a) {
        if (cap > 0 && visited >= cap) return;
        ++visited;
        visit(a);
    };
    double total = std::pow(double(r), l);
    if (r == 2 || total <= 20000) {
        // projective representatives: first nonzero coordinate equal to 1
        std::vector<long long> a(l, 0);
        std::function<void(int, bool)> rec = [&](int j, bool started) {
            if (j == l) {
                if (started) emit(a);
                return;
            }
            for (long long v = 0; v < r; ++v) {
                if (!started && v > 1) break;
                a[j] = v;
                rec(j + 1, started || v != 0);
            }
            a[j] = 0;
        };
        rec(0, false);
        return;
    }
    const auto simple_eps = simple_roots_epsilon(fr);
    if (fr.family == Family::A) {
        // affine normalisation: a most frequent value sits at 0 and a most
        // frequent among the others at 1
        auto keep = [&](const std::vector<int>& c, int v) {
            if (v >= 1 && c[1] > c[0]) return false;
            if (v >= 2 && c[v] > c[1]) return false;
            return true;
        };
        multisets(static_cast<int>(r), l + 1, keep, [&](const std::vector<int>& c) {
            if (c[1] == 0) return;
            std::vector<long long> theta;
            for (int v = 0; v < r; ++v)
                for (int k = 0; k < c[v]; ++k) theta.push_back(v);
            emit(theta_to_roots(simple_eps, theta, r));
        });
        return;
    }
    // B, C, D with r odd: theta up to signed permutations is a multiset of
    // absolute values; for D the sign parity matters when no entry is zero
    const int h = static_cast<int>((r - 1) / 2);
    multisets(h + 1, l, [](const std::vector<int>&, int) { return true; }, [&](const std::vector<int>& c) {
        if (c[0] == l) return;
        std::vector<long long> theta;
        for (int v = h; v >= 0; --v)
            for (int k = 0; k < c[v]; ++k) theta.push_back(v);
        emit(theta_to_roots(simple_eps, theta, r));
        if (fr.family == Family::D && c[0] == 0) {
            theta.back() = -theta.back();
            emit(theta_to_roots(simple_eps, theta, r));
        }
    });
}

} // namespace

TorusClass TorusClass::from_root_values(const FamilyRank& fr, long long r, const std::vector<long long>& a) {
    const int l = fr.rank;
    TorusClass s;
    s.fr = fr;
    // e_i(s) = zeta_r^{e_i} with e rational of denominator D; t = D e
    long long D = 1;
    std::vector<long long> t(natural_coords(fr), 0);
    switch (fr.family) {
    case Family::A: {
        D = l + 1;
        long long weighted = 0;
        for (int k = 0; k < l; ++k) weighted += (k + 1) * a[k];
        t[l] = -weighted;
        for (int i = l - 1; i >= 0; --i) t[i] = t[i + 1] + D * a[i];
        break;
    }
    case Family::B:
        t[l - 1] = a[l - 1];
        for (int i = l - 2; i >= 0; --i) t[i] = t[i + 1] + a[i];
        break;
    case Family::C:
        D = 2;
        t[l - 1] = a[l - 1];
        for (int i = l - 2; i >= 0; --i) t[i] = t[i + 1] + 2 * a[i];
        break;
    case Family::D:
        D = 2;
        t[l - 1] = a[l - 1] - a[l - 2];
        for (int i = l - 2; i >= 0; --i) t[i] = t[i + 1] + 2 * a[i];
        break;
    }
    s.M = D * r;
    for (auto& x : t) x = mod(x, s.M);
    s.t = t;
    return s;
}

std::string TorusClass::describe() const {
    std::ostringstream os;
    os << "diag(";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << "z^" << t[i];
    os << ") z=zeta_" << M;
    return os.str();
}

long long evaluate_weight(const TorusClass& s, const Weight& nu) {
    auto x2 = weight_to_epsilon2(s.fr, nu);
    long long v = 0;
    for (size_t i = 0; i < x2.size(); ++i) v += s.t[i] * x2[i];
    return mod(v, 2 * s.M);
}

std::map<long long, long long> eigen_multiset(const Character& ch, const TorusClass& s) {
    std::map<long long, long long> out;
    for (const auto& [nu, m] : ch.mult) out[evaluate_weight(s, nu)] += m;
    return out;
}

bool is_central(const TorusClass& s) {
    for (const auto& alpha : simple_roots_epsilon(s.fr)) {
        long long v = 0;
        for (size_t i = 0; i < alpha.size(); ++i) v += 2 * alpha[i] * s.t[i];
        if (mod(v, 2 * s.M) != 0) return false;
    }
    return true;
}

long long central_level_scalar(const ModuleSpec& spec, int i, int j) {
    auto rs = RootSystem::build(spec.fr);
    BigInt k = 1;
    for (const auto& row : rs.fundamental_in_simple()) k = boost::multiprecision::lcm(k, denominator(row[i - 1]));
    Rational top = rs.expand_over_simple_roots(spec.highest)[i - 1] * Rational(k);
    if (denominator(top) != 1) throw Error("Mismatch", "non-integral central exponent");
    return static_cast<long long>(numerator(top) - k * j);
}

bool WitnessEntry::matches(const ModuleSpec& spec) const {
    if (spec.fr.family != family || !ranks.contains(spec.fr.rank) || !cond.matches(spec.p)) return false;
    auto w = weight.at(spec.fr.rank);
    return w && *w == spec.highest;
}

TorusClass WitnessEntry::instantiate(int l, int p, long long generic) const {
    auto env = lp_env(l, p);
    env["G"] = generic;
    TorusClass s;
    s.fr = FamilyRank{family, l};
    s.M = static_cast<long long>(M.eval_int(env));
    for (const auto& [count, exp] : blocks) {
        long long n = static_cast<long long>(count.eval_int(env));
        long long x = mod(static_cast<long long>(exp.eval_int(env)), s.M);
        for (long long k = 0; k < n; ++k) s.t.push_back(x);
    }
    if (static_cast<int>(s.t.size()) != natural_coords(s.fr))
        throw Error("Mismatch", "witness on line " + std::to_string(line) + " has " + std::to_string(s.t.size()) +
                                    " coordinates at rank " + std::to_string(l));
    if (family == Family::A && mod(std::accumulate(s.t.begin(), s.t.end(), 0LL), s.M) != 0)
        throw Error("Mismatch", "witness on line " + std::to_string(line) + " does not have determinant one");
    return s;
}

std::vector<WitnessEntry> load_witnesses(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open witness catalog " + path);
    std::vector<WitnessEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto where = path + ":" + std::to_string(lineno) + ": ";
        auto colon = t.find(':');
        auto semi = t.find(';');
        if (colon == std::string::npos || semi == std::string::npos || semi < colon)
            throw Error("ParseError", where + "expected 'HEAD : M ; blocks'");
        std::istringstream head(t.substr(0, colon));
        std::string fam, ranks, weight, cond;
        if (!(head >> fam >> ranks >> weight >> cond)) throw Error("ParseError", where + "bad head");
        WitnessEntry e{parse_family(fam), RankRange::parse(ranks), WeightPattern::parse(weight),
                       CharCondition::parse(cond), Expr::parse(trim(t.substr(colon + 1, semi - colon - 1))), {}, lineno};
        for (const auto& b : split_trim(t.substr(semi + 1), ',')) {
            auto c = b.find(':');
            if (c == std::string::npos) throw Error("ParseError", where + "block '" + b + "' lacks ':'");
            e.blocks.emplace_back(Expr::parse(trim(b.substr(0, c))), Expr::parse(trim(b.substr(c + 1))));
        }
        out.push_back(std::move(e));
    }
    return out;
}

const std::vector<WitnessEntry>& standard_witnesses() {
    static const std::vector<WitnessEntry> w = load_witnesses(data_dir() + "/witnesses.txt");
    return w;
}

SemisimpleMax max_eigenspace_on_character(const ModuleSpec& spec, const Character& ch, const SearchConfig& config) {
    const auto& fr = spec.fr;
    auto rs = RootSystem::build(fr);
    SemisimpleMax best;
    best.value = -1;

    for (const auto& w : standard_witnesses()) {
        if (!w.matches(spec)) continue;
        TorusClass s = w.instantiate(fr.rank, spec.p);
        // a witness of order divisible by p does not exist in characteristic p
        if (spec.p > 0 && s.M % spec.p == 0) continue;
        if (is_central(s)) continue;
        for (const auto& [k, m] : eigen_multiset(ch, s))
            if (m > best.value) {
                best.value = m;
                best.witness = s;
                best.eigen_exponent = k;
                best.origin = "witness:" + std::to_string(w.line);
            }
    }

    if (!config.witness_catalog_only) {
        const WeightTable table = weight_table(rs, spec.highest, ch);
        const int max_order = config.max_order > 0 ? config.max_order : 2 * fr.rank + 4;
        std::vector<long long> hist;
        for (int r : primes_up_to(max_order)) {
            if (r == spec.p) continue;
            std::vector<long long> best_a;
            long long best_here = -1, best_val = 0;
            sweep_prime(fr, r, config.max_points, [&](const std::vector<long long>& a) {
                ++best.points;
                auto [mass, val] = largest_fibre(table, a, r, hist);
                if (mass > best_here) {
                    best_here = mass;
                    best_a = a;
                    best_val = val;
                }
            });
            if (best_here > best.value) {
                best.value = best_here;
                best.witness = TorusClass::from_root_values(fr, r, best_a);
                best.origin = "sweep:r=" + std::to_string(r);
                // the eigenvalue of any weight in the winning fibre
                for (size_t w = 0; w < table.weights.size(); ++w) {
                    long long v = 0;
                    for (int j = 0; j < fr.rank; ++j) v += best_a[j] * table.depth[w][j];
                    if (mod(v, r) == best_val) {
                        best.eigen_exponent = evaluate_weight(best.witness, table.weights[w]);
                        break;
                    }
                }
            }
        }
    }
    if (best.value < 0) throw Error("ConfigError", "empty search space for " + to_string(fr));
    return best;
}

SemisimpleMax max_eigenspace_semisimple(const ModuleSpec& spec, const SearchConfig& config) {
    auto irr = Irreducible::get(spec.fr, spec.highest, spec.p);
    return max_eigenspace_on_character(spec, irr->character(), config);
}

} // namespace nu
