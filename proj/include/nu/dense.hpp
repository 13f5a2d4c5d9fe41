#pragma once

#include "nu/field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace nu {

// Functors applied to explicit matrices: exterior powers through k x k
// minors, symmetric powers by expanding products of columns, and Kronecker
// products. Bases are k-subsets (wedge) and sorted k-multisets (sym) in
// lexicographic order.

inline std::vector<std::vector<int>> subsets(int n, int k, bool multisets) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            gen(multisets ? i : i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    return out;
}

template <class F>
Elem determinant(const F& f, Matrix<F> m) {
    const int n = m.rows;
    Elem det = f.one();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m.at(i, c)) { piv = i; break; }
        if (piv < 0) return f.zero();
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(c, c));
        Elem inv = f.inv(m.at(c, c));
        for (int i = c + 1; i < n; ++i) {
            Elem x = m.at(i, c);
            if (!x) continue;
            Elem s = f.mul(x, inv);
            for (int j = c; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(s, m.at(c, j)));
        }
    }
    return det;
}

template <class F>
Matrix<F> wedge_power(const F& f, const Matrix<F>& g, int k) {
    auto basis = subsets(g.rows, k, false);
    const int n = static_cast<int>(basis.size());
    Matrix<F> out(n, n);
    Matrix<F> sub(k, k);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) sub.at(a, b) = g.at(basis[r][a], basis[c][b]);
            out.at(r, c) = determinant(f, sub);
        }
    return out;
}

template <class F>
Matrix<F> sym_power(const F& f, const Matrix<F>& g, int k) {
    auto basis = subsets(g.rows, k, true);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    const int n = static_cast<int>(basis.size());
    Matrix<F> out(n, n);
    std::vector<int> rows(k);
    for (int c = 0; c < n; ++c) {
        const auto& col = basis[c];
        std::function<void(int, Elem)> expand = [&](int pos, Elem coef) {
            if (pos == k) {
                std::vector<int> key = rows;
                std::sort(key.begin(), key.end());
                Elem& slot = out.at(index.at(key), c);
                slot = f.add(slot, coef);
                return;
            }
            for (int r = 0; r < g.rows; ++r) {
                Elem v = g.at(r, col[pos]);
                if (!v) continue;
                rows[pos] = r;
                expand(pos + 1, f.mul(coef, v));
            }
        };
        expand(0, f.one());
    }
    return out;
}

template <class F>
Matrix<F> kronecker(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> out(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            Elem x = a.at(i, j);
            if (!x) continue;
            for (int r = 0; r < b.rows; ++r)
                for (int c = 0; c < b.cols; ++c)
                    out.at(i * b.rows + r, j * b.cols + c) = f.mul(x, b.at(r, c));
        }
    return out;
}

template <class F>
Matrix<F> minus_identity(const F& f, Matrix<F> m, Elem mu) {
    for (int i = 0; i < m.rows; ++i) m.at(i, i) = f.sub(m.at(i, i), mu);
    return m;
}

// Unipotent Jordan block of size n (ones on the superdiagonal).
template <class F>
Matrix<F> unipotent_block(int n) {
    Matrix<F> m = identity<F>(n);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    return m;
}

template <class F>
Matrix<F> block_diagonal(const std::vector<Matrix<F>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows;
    Matrix<F> out(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows;
    }
    return out;
}

} // namespace nu
