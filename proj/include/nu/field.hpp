#pragma once

#include "nu/common.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nu {

using Elem = std::uint32_t;

// Z/p with elements stored as residues. zero() == 0 and one() == 1 in both
// field types, which keeps sparse code readable.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    std::uint64_t order() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a ? p_ - a : 0; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t(a) * b) % p_); }
    Elem inv(Elem a) const;
    Elem from_int(long long n) const;
    Elem pow(Elem a, std::uint64_t e) const;
    // A generator of the multiplicative group.
    Elem primitive() const { return prim_; }

private:
    std::uint32_t p_;
    Elem prim_ = 1;
};

// GF(p^k) through Zech logarithms: 0 is zero, x > 0 stands for g^(x-1) with g
// a root of a primitive polynomial found by search.
class GaloisField {
public:
    GaloisField(std::uint32_t p, int k);

    std::uint32_t characteristic() const { return p_; }
    std::uint64_t order() const { return q_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const {
        if (!a || !b) return 0;
        std::uint64_t s = std::uint64_t(a - 1) + (b - 1);
        if (s >= q_ - 1) s -= q_ - 1;
        return static_cast<Elem>(s + 1);
    }
    Elem inv(Elem a) const;
    Elem from_int(long long n) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem primitive() const { return 2; }

private:
    std::uint32_t p_;
    int k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> zech_;   // zech_[i] = log(1 + g^i) + 1, 0 if 1 + g^i = 0
    std::vector<Elem> small_;           // images of 0..p-1
    std::uint32_t half_;                // log(-1)
};

// Element of multiplicative order exactly r (r must divide q-1).
template <class F>
Elem element_of_order(const F& f, std::uint64_t r) {
    if ((f.order() - 1) % r != 0) throw Error("FieldUnavailable", "no element of order " + std::to_string(r));
    return f.pow(f.primitive(), (f.order() - 1) / r);
}

template <class F>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    Elem& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    Elem at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

template <class F>
Matrix<F> identity(int n) {
    Matrix<F> m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

template <class F>
Matrix<F> multiply(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
    if (x.cols != y.rows) throw Error("Mismatch", "matrix shapes do not compose");
    Matrix<F> out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Elem v = x.at(i, k);
            if (!v) continue;
            Elem* orow = &out.a[std::size_t(i) * out.cols];
            const Elem* yrow = &y.a[std::size_t(k) * y.cols];
            for (int j = 0; j < y.cols; ++j)
                if (yrow[j]) orow[j] = f.add(orow[j], f.mul(v, yrow[j]));
        }
    return out;
}

// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<int> row_reduce(const F& f, Matrix<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Elem inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            Elem x = m.at(i, c);
            if (!x) continue;
            for (int j = c; j < m.cols; ++j)
                if (m.at(r, j)) m.at(i, j) = f.sub(m.at(i, j), f.mul(x, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Rank by forward elimination only (cheaper than the reduced form).
template <class F>
int rank(const F& f, Matrix<F> m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Elem inv = f.inv(m.at(r, c));
        for (int i = r + 1; i < m.rows; ++i) {
            Elem x = m.at(i, c);
            if (!x) continue;
            Elem s = f.mul(x, inv);
            const Elem* prow = &m.a[std::size_t(r) * m.cols];
            Elem* row = &m.a[std::size_t(i) * m.cols];
            for (int j = c; j < m.cols; ++j)
                if (prow[j]) row[j] = f.sub(row[j], f.mul(s, prow[j]));
        }
        ++r;
    }
    return r;
}

// Basis of {x : m x = 0}, one column vector per entry.
template <class F>
std::vector<std::vector<Elem>> nullspace(const F& f, Matrix<F> m) {
    auto piv = row_reduce(f, m);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<Elem>> out;
    for (int free = 0; free < m.cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<Elem> v(m.cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.neg(m.at(int(r), free));
        out.push_back(std::move(v));
    }
    return out;
}

// Inverse of a square matrix; throws Mismatch when singular.
template <class F>
Matrix<F> inverse(const F& f, const Matrix<F>& m) {
    const int n = m.rows;
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto piv = row_reduce(f, aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw Error("Mismatch", "singular matrix");
    Matrix<F> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

// Indices of a maximal independent subset of the rows, chosen greedily.
template <class F>
std::vector<int> independent_rows(const F& f, const Matrix<F>& m) {
    Matrix<F> t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return row_reduce(f, t);
}

// Jordan block sizes (decreasing) of a nilpotent matrix, from the ranks of
// its powers. Throws Mismatch if the matrix is not nilpotent.
template <class F>
std::vector<int> jordan_blocks(const F& f, const Matrix<F>& nil) {
    const int n = nil.rows;
    std::vector<int> ranks{n};
    Matrix<F> power = nil;
    while (ranks.back() > 0) {
        int r = rank(f, power);
        if (r == ranks.back()) throw Error("Mismatch", "matrix is not nilpotent");
        ranks.push_back(r);
        if (r > 0) power = multiply(f, power, nil);
    }
    // at_least[k] = number of blocks of size >= k
    std::vector<int> out;
    for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
        int at_least = ranks[k - 1] - ranks[k];
        int bigger = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (int c = 0; c < at_least - bigger; ++c) out.push_back(static_cast<int>(k));
    }
    return out;
}

} // namespace nu
