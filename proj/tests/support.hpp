#pragma once

// Random inputs and brute-force oracles shared by the test binaries.
// The oracles avoid the library's own algebra wherever practical.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "dwigner/matrix.hpp"
#include "dwigner/states.hpp"
#include "dwigner/two_qubit.hpp"
#include "table_expr.hpp"

namespace testing {

using dwig::cmatrix;
using cx = std::complex<double>;
using rng = std::mt19937_64;

inline cx gauss(rng& g) {
    std::normal_distribution<double> n(0.0, 1.0);
    double re = n(g);
    return {re, n(g)};
}

inline double uniform(rng& g, double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline cmatrix random_matrix(int n, rng& g) {
    cmatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = gauss(g);
    return m;
}

inline cmatrix random_hermitian(int n, rng& g) {
    cmatrix m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = gauss(g).real();
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = gauss(g);
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

// A A^dag / Tr with A of n x rank Gaussian entries; rank drawn in [1, n].
// rank 0 draws the rank uniformly from 1..n.
inline cmatrix random_density(int n, rng& g, int rank = 0) {
    if (rank == 0) rank = std::uniform_int_distribution<int>(1, n)(g);
    std::vector<cx> a(n * rank);
    for (auto& x : a) x = gauss(g);
    cmatrix m(n);
    double tr = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cx s = 0;
            for (int k = 0; k < rank; ++k) s += a[i * rank + k] * std::conj(a[j * rank + k]);
            m(i, j) = s;
            if (i == j) tr += s.real();
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) /= tr;
    for (int i = 0; i < n; ++i) m(i, i) = m(i, i).real();
    return m;
}

inline std::vector<cx> random_ket(int n, rng& g) {
    std::vector<cx> v(n);
    double norm = 0;
    for (auto& x : v) {
        x = gauss(g);
        norm += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(norm);
    return v;
}

// Valid X-state: two independent PSD 2x2 blocks on {1,4} and {2,3}.
inline dwig::xstate random_xstate(rng& g) {
    double p[4];
    double s = 0;
    for (auto& x : p) {
        x = -std::log(uniform(g, 1e-12, 1.0));
        s += x;
    }
    for (auto& x : p) x /= s;
    dwig::xstate x;
    x.rho11 = p[0];
    x.rho22 = p[1];
    x.rho33 = p[2];
    x.rho44 = p[3];
    double r14 = std::sqrt(p[0] * p[3]) * uniform(g);
    double r23 = std::sqrt(p[1] * p[2]) * uniform(g);
    x.rho14 = std::polar(r14, uniform(g, 0.0, 2 * M_PI));
    x.rho23 = std::polar(r23, uniform(g, 0.0, 2 * M_PI));
    return x;
}

inline cmatrix naive_mul(const cmatrix& a, const cmatrix& b) {
    const int n = static_cast<int>(a.dim());
    cmatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cx s = 0;
            for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

inline cx naive_trace(const cmatrix& a) {
    cx s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
    return s;
}

// sum_ij conj(a_ij) b_ij
inline cx naive_trace_adjoint(const cmatrix& a, const cmatrix& b) {
    cx s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) s += std::conj(a(i, j)) * b(i, j);
    return s;
}

inline cmatrix naive_kron(const cmatrix& a, const cmatrix& b) {
    const int n = static_cast<int>(a.dim()), m = static_cast<int>(b.dim());
    cmatrix c(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) c(i * m + k, j * m + l) = a(i, j) * b(k, l);
    return c;
}

// Trace out the other qubit of a 4 x 4 matrix, keeping qubit `keep` (1 or 2).
inline cmatrix partial_trace(const cmatrix& rho, int keep) {
    cmatrix r(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int t = 0; t < 2; ++t)
                r(i, j) += keep == 1 ? rho(2 * i + t, 2 * j + t) : rho(2 * t + i, 2 * t + j);
    return r;
}

inline cmatrix pauli(int k) {
    const cx I{0.0, 1.0};
    switch (k) {
    case 0:
        return cmatrix(2, {1.0, 0.0, 0.0, 1.0});
    case 1:
        return cmatrix(2, {0.0, 1.0, 1.0, 0.0});
    case 2:
        return cmatrix(2, {0.0, -I, I, 0.0});
    default:
        return cmatrix(2, {1.0, 0.0, 0.0, -1.0});
    }
}

inline double max_diff(const cmatrix& a, const cmatrix& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

// Characteristic polynomial by Faddeev-LeVerrier, coefficients of
// lambda^n + c[1] lambda^{n-1} + ... + c[n].
inline std::vector<double> char_poly(const cmatrix& a) {
    const int n = static_cast<int>(a.dim());
    std::vector<double> c(n + 1);
    c[0] = 1;
    cmatrix m(n);
    for (int k = 1; k <= n; ++k) {
        cmatrix t = m;
        for (int i = 0; i < n; ++i) t(i, i) += c[k - 1];
        m = naive_mul(a, t);
        c[k] = -naive_trace(m).real() / k;
    }
    return c;
}

// Real roots of the characteristic polynomial of a Hermitian matrix with
// distinct eigenvalues, by sign scanning plus bisection.
inline std::vector<double> char_poly_roots(const cmatrix& a) {
    auto c = char_poly(a);
    auto p = [&](double x) {
        double v = 0;
        for (double ci : c) v = v * x + ci;
        return v;
    };
    double bound = 1;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) bound += std::abs(a(i, j));
    std::vector<double> roots;
    const int steps = 200000;
    double x0 = -bound, f0 = p(x0);
    for (int s = 1; s <= steps; ++s) {
        double x1 = -bound + 2 * bound * s / steps, f1 = p(x1);
        if (f0 == 0) roots.push_back(x0);
        else if ((f0 < 0) != (f1 < 0)) {
            double lo = x0, hi = x1, flo = f0;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi), fm = p(mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

inline std::string idx(int a, int b) { return std::to_string(a) + std::to_string(b); }

// r11 .. r44 from the upper triangle (1-based labels).
inline env element_env(const cmatrix& m) {
    env e;
    for (int i = 0; i < static_cast<int>(m.dim()); ++i)
        for (int j = i; j < static_cast<int>(m.dim()); ++j) e["r" + idx(i + 1, j + 1)] = m(i, j);
    return e;
}

inline env fano_env(const dwig::fano& f) {
    const char* ax = "xyz";
    env e;
    for (int i = 0; i < 3; ++i) {
        e[std::string("a") + ax[i]] = f.a[i];
        e[std::string("b") + ax[i]] = f.b[i];
        for (int j = 0; j < 3; ++j) e[std::string("c") + ax[i] + ax[j]] = f.c[i][j];
    }
    return e;
}

// Fano coefficients by explicit traces against Kronecker products of Paulis.
inline dwig::fano fano_oracle(const cmatrix& rho) {
    dwig::fano f;
    for (int i = 0; i < 3; ++i) {
        f.a[i] = naive_trace(naive_mul(rho, naive_kron(pauli(i + 1), pauli(0)))).real();
        f.b[i] = naive_trace(naive_mul(rho, naive_kron(pauli(0), pauli(i + 1)))).real();
        for (int j = 0; j < 3; ++j) f.c[i][j] = naive_trace(naive_mul(rho, naive_kron(pauli(i + 1), pauli(j + 1)))).real();
    }
    return f;
}

inline double trace_power(const cmatrix& a, int k) {
    cmatrix p = a;
    for (int i = 1; i < k; ++i) p = naive_mul(p, a);
    return naive_trace(p).real();
}

}  // namespace testing
