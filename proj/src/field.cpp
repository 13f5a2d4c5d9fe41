#include "nu/field.hpp"

namespace nu {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw Error("FieldUnavailable", std::to_string(p) + " is not prime");
    if (p == 2) return;
    auto fac = prime_factors(p - 1);
    for (Elem g = 2; g < p; ++g) {
        bool ok = true;
        for (auto r : fac) ok = ok && pow(g, (p - 1) / r) != 1;
        if (ok) {
            prim_ = g;
            return;
        }
    }
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem PrimeField::inv(Elem a) const {
    if (!a) throw Error("Mismatch", "inverse of zero");
    return pow(a, p_ - 2);
}

Elem PrimeField::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
}

GaloisField::GaloisField(std::uint32_t p, int k) : p_(p), k_(k) {
    if (!is_prime(p) || k < 1) throw Error("FieldUnavailable", "bad field parameters");
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    if (q_ > (1u << 24)) throw Error("FieldUnavailable", "field too large for log tables");
    const std::uint64_t n = q_ - 1;

    // polynomials of degree < k are encoded in base p
    std::vector<std::uint32_t> log_of(q_, 0), poly_of(n, 0);
    std::vector<int> f(k + 1, 0);  // monic modulus, f[k] = 1
    auto try_modulus = [&](std::uint64_t code) {
        for (int i = 0; i < k; ++i) {
            f[i] = static_cast<int>(code % p);
            code /= p;
        }
        f[k] = 1;
        if (f[0] == 0) return false;
        std::vector<int> cur(k, 0);
        cur[0] = 1;
        std::vector<char> seen(q_, 0);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint64_t enc = 0;
            for (int j = k - 1; j >= 0; --j) enc = enc * p + cur[j];
            if (seen[enc] || enc == 0) return false;
            seen[enc] = 1;
            poly_of[i] = static_cast<std::uint32_t>(enc);
            // multiply by x modulo f
            int top = cur[k - 1];
            for (int j = k - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            for (int j = 0; j < k; ++j) cur[j] = static_cast<int>((cur[j] + (p - top) * static_cast<long long>(f[j])) % p);
        }
        return cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](int c) { return c == 0; });
    };
    bool found = false;
    if (k == 1) {
        PrimeField pf(p);
        Elem g = pf.primitive();
        Elem x = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            poly_of[i] = x;
            x = pf.mul(x, g);
        }
        found = true;
    } else {
        for (std::uint64_t code = 1; code < q_ && !found; ++code) found = try_modulus(code);
    }
    if (!found) throw Error("FieldUnavailable", "no primitive polynomial found");
    for (std::uint64_t i = 0; i < n; ++i) log_of[poly_of[i]] = static_cast<std::uint32_t>(i);

    auto add_one = [&](std::uint32_t enc) {
        std::uint32_t c0 = enc % p;
        return enc - c0 + (c0 + 1) % p;
    };
    zech_.assign(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint32_t s = add_one(poly_of[i]);
        zech_[i] = s == 0 ? 0 : log_of[s] + 1;
    }
    half_ = p == 2 ? 0 : static_cast<std::uint32_t>(n / 2);
    small_.assign(p, 0);
    for (std::uint32_t c = 1; c < p; ++c) small_[c] = log_of[c] + 1;
}

Elem GaloisField::neg(Elem a) const {
    if (!a) return 0;
    std::uint64_t s = std::uint64_t(a - 1) + half_;
    if (s >= q_ - 1) s -= q_ - 1;
    return static_cast<Elem>(s + 1);
}

Elem GaloisField::add(Elem a, Elem b) const {
    if (!a) return b;
    if (!b) return a;
    const std::uint64_t n = q_ - 1;
    std::uint64_t d = (std::uint64_t(b) + n - a) % n;
    std::uint32_t z = zech_[d];
    if (!z) return 0;
    std::uint64_t s = std::uint64_t(a - 1) + (z - 1);
    if (s >= n) s -= n;
    return static_cast<Elem>(s + 1);
}

Elem GaloisField::inv(Elem a) const {
    if (!a) throw Error("Mismatch", "inverse of zero");
    std::uint64_t n = q_ - 1;
    return static_cast<Elem>((n - (a - 1)) % n + 1);
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const {
    if (!a) return e == 0 ? 1 : 0;
    std::uint64_t n = q_ - 1;
    return static_cast<Elem>((std::uint64_t(a - 1) * (e % n)) % n + 1);
}

Elem GaloisField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return small_[r];
}

} // namespace nu
