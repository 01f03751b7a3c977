#pragma once

// Independent reference implementations for the tests. Nothing here calls
// the library's linear algebra: dense Gauss-Jordan over mpq_class (or a
// small Q(i) pair type), brackets from dense tensors built straight from the
// commutation relations, and hand-rolled random generators.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Q(i) as a pair of mpq_class.
struct CQ {
    mpq_class re, im;
    CQ() = default;
    CQ(long v) : re(v), im(0) {}  // NOLINT
    CQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
    bool is_zero() const { return re == 0 && im == 0; }
    friend CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend CQ operator*(const CQ& a, const CQ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend CQ operator/(const CQ& a, const CQ& b) {
        const mpq_class n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    CQ operator-() const { return {-re, -im}; }
    friend bool operator==(const CQ& a, const CQ& b) { return a.re == b.re && a.im == b.im; }
};

inline bool is_zero(const mpq_class& x) { return x == 0; }
inline bool is_zero(const CQ& x) { return x.is_zero(); }

template <class T>
using Mat = std::vector<std::vector<T>>;

// In-place Gauss-Jordan; returns pivot columns.
template <class T>
std::vector<std::size_t> gauss_jordan(Mat<T>& m, std::size_t cols) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && is_zero(m[p][c])) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const T inv = T(1) / m[r][c];
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            const T f = m[i][c];
            for (std::size_t k = 0; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class T>
std::size_t rank(Mat<T> m, std::size_t cols) {
    return gauss_jordan(m, cols).size();
}

template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m, std::size_t cols) {
    const auto piv = gauss_jordan(m, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<T>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

// Dense bracket tensor c[i][j][k].
template <class T>
struct Tensor {
    std::size_t d = 0;
    std::vector<T> c;
    explicit Tensor(std::size_t dim) : d(dim), c(dim * dim * dim, T(0)) {}
    T& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * d + j) * d + k]; }
    const T& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * d + j) * d + k]; }
    void rel(std::size_t i, std::size_t j, std::size_t k, long v) {
        at(i, j, k) = at(i, j, k) + T(v);
        at(j, i, k) = at(j, i, k) - T(v);
    }
    std::vector<T> bracket(const std::vector<T>& x, const std::vector<T>& y) const {
        std::vector<T> out(d, T(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (is_zero(y[j])) continue;
                const T s = x[i] * y[j];
                for (std::size_t k = 0; k < d; ++k) {
                    if (!is_zero(at(i, j, k))) out[k] = out[k] + s * at(i, j, k);
                }
            }
        }
        return out;
    }
};

// Straight from the commutation relations, basis (e, h, f, z, u_1.., v_1..).
template <class T>
Tensor<T> schrodinger(std::size_t n) {
    Tensor<T> t(2 * n + 4);
    const std::size_t e = 0, h = 1, f = 2, z = 3;
    t.rel(h, e, e, 2);
    t.rel(h, f, f, -2);
    t.rel(e, f, h, 1);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t u = 4 + k, v = 4 + n + k;
        t.rel(u, v, z, 1);
        t.rel(h, u, u, 1);
        t.rel(h, v, v, -1);
        t.rel(e, v, u, 1);
        t.rel(f, u, v, 1);
    }
    return t;
}

template <class T>
Tensor<T> heisenberg(std::size_t n) {
    Tensor<T> t(2 * n + 1);
    for (std::size_t k = 0; k < n; ++k) t.rel(1 + k, 1 + n + k, 0, 1);
    return t;
}

template <class T>
Tensor<T> sl2() {
    Tensor<T> t(3);
    t.rel(1, 0, 0, 2);
    t.rel(1, 2, 2, -2);
    t.rel(0, 2, 1, 1);
    return t;
}

// Map as a dense d x d matrix, m[a][b] = coefficient of b_a in D(b_b).
template <class T>
std::vector<T> act(const Mat<T>& m, const std::vector<T>& x) {
    std::vector<T> out(m.size(), T(0));
    for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = 0; b < x.size(); ++b) {
            if (!is_zero(m[a][b]) && !is_zero(x[b])) out[a] = out[a] + m[a][b] * x[b];
        }
    }
    return out;
}

template <class T>
std::vector<T> unit(std::size_t d, std::size_t k) {
    std::vector<T> v(d, T(0));
    v[k] = T(1);
    return v;
}

// Der(L): columns of the Leibniz operator are obtained by applying the
// residual D[x,y] - [Dx,y] - [x,Dy] to each elementary map E_ab.
template <class T>
std::vector<Mat<T>> derivations(const Tensor<T>& t) {
    const std::size_t d = t.d;
    std::vector<std::vector<T>> cols;  // one column per unknown (a, b)
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t a = 0; a < d; ++a) {
            Mat<T> e(d, std::vector<T>(d, T(0)));
            e[a][b] = T(1);
            std::vector<T> col;
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = i + 1; j < d; ++j) {
                    const auto bi = unit<T>(d, i), bj = unit<T>(d, j);
                    const auto lhs = act(e, t.bracket(bi, bj));
                    const auto r1 = t.bracket(act(e, bi), bj);
                    const auto r2 = t.bracket(bi, act(e, bj));
                    for (std::size_t k = 0; k < d; ++k) col.push_back(lhs[k] - r1[k] - r2[k]);
                }
            }
            cols.push_back(std::move(col));
            unknowns.emplace_back(a, b);
        }
    }
    const std::size_t rows = cols.empty() ? 0 : cols[0].size();
    Mat<T> sys(rows, std::vector<T>(d * d, T(0)));
    for (std::size_t u = 0; u < cols.size(); ++u) {
        for (std::size_t r = 0; r < rows; ++r) sys[r][u] = cols[u][r];
    }
    std::vector<Mat<T>> out;
    for (const auto& v : nullspace(sys, d * d)) {
        Mat<T> m(d, std::vector<T>(d, T(0)));
        for (std::size_t u = 0; u < unknowns.size(); ++u) m[unknowns[u].first][unknowns[u].second] = v[u];
        out.push_back(std::move(m));
    }
    return out;
}

// dim {Delta : Delta(x_p) in W_{x_p} for every probe}, via auxiliary
// coefficients: Delta(x_p) = sum_i c_{p,i} D_i(x_p). The projection onto the
// Delta block loses exactly the kernels of c -> sum c_i D_i(x_p).
template <class T>
std::size_t candidate_dim(const std::vector<Mat<T>>& der, const std::vector<std::vector<T>>& probes, std::size_t d) {
    const std::size_t m = der.size();
    const std::size_t cols = d * d + probes.size() * m;
    Mat<T> sys;
    std::size_t lost = 0;
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const auto& x = probes[p];
        std::vector<std::vector<T>> images;
        for (const auto& dm : der) images.push_back(act(dm, x));
        Mat<T> w(d, std::vector<T>(m, T(0)));
        for (std::size_t a = 0; a < d; ++a) {
            std::vector<T> row(cols, T(0));
            for (std::size_t b = 0; b < d; ++b) row[a * d + b] = x[b];
            for (std::size_t i = 0; i < m; ++i) {
                row[d * d + p * m + i] = -images[i][a];
                w[a][i] = images[i][a];
            }
            sys.push_back(std::move(row));
        }
        lost += m - rank(w, m);
    }
    const std::size_t nullity = cols - rank(sys, cols);
    return nullity - lost;
}

// Hand-rolled generator: small integers and fractions from a seeded engine.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : g_(seed) {}
    long integer(long lo, long hi) {
        const std::uint64_t w = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(g_() % w);
    }
    bool coin(int percent) { return integer(0, 99) < percent; }
    // p/q with |p| <= 20, 1 <= q <= 9; zero with probability zero_pct.
    std::pair<long, long> fraction(int zero_pct = 10) {
        if (coin(zero_pct)) return {0, 1};
        return {integer(-20, 20), integer(1, 9)};
    }
    std::uint64_t raw() { return g_(); }

private:
    std::mt19937_64 g_;
};

}  // namespace oracle
