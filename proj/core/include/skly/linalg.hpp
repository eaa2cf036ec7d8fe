// SPDX-License-Identifier: Apache-2.0
//
// Small dense complex linear algebra: 2x2 matrices and n<=8 solvers.
// This is all the numerics the bivector assembly needs; no external
// linear-algebra dependency is warranted at these sizes.
#ifndef SKLY_LINALG_HPP
#define SKLY_LINALG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "skly/errors.hpp"

namespace skly {

using cplx = std::complex<double>;

// 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<cplx, 4> a{};

    static Mat2 zero() { return {}; }
    static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

    cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
    const cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

    Mat2 operator+(const Mat2& o) const {
        return {{a[0] + o.a[0], a[1] + o.a[1], a[2] + o.a[2], a[3] + o.a[3]}};
    }
    Mat2 operator-(const Mat2& o) const {
        return {{a[0] - o.a[0], a[1] - o.a[1], a[2] - o.a[2], a[3] - o.a[3]}};
    }
    Mat2 operator*(const Mat2& o) const {
        return {{a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3],
                 a[2] * o.a[0] + a[3] * o.a[2], a[2] * o.a[1] + a[3] * o.a[3]}};
    }
    Mat2 operator*(cplx s) const { return {{a[0] * s, a[1] * s, a[2] * s, a[3] * s}}; }
    Mat2 operator-() const { return {{-a[0], -a[1], -a[2], -a[3]}}; }

    cplx trace() const { return a[0] + a[3]; }
    cplx det() const { return a[0] * a[3] - a[1] * a[2]; }
    double max_abs() const {
        double m = 0.0;
        for (const auto& x : a) m = std::max(m, std::abs(x));
        return m;
    }
};

inline Mat2 operator*(cplx s, const Mat2& m) { return m * s; }

// Trace-free part: M - tr(M)/2 * I.
inline Mat2 trace_free(const Mat2& m) {
    cplx h = m.trace() / 2.0;
    Mat2 r = m;
    r.a[0] -= h;
    r.a[3] -= h;
    return r;
}

// Pauli matrices; index 0 is the identity.
inline const Mat2& pauli(int a) {
    static const std::array<Mat2, 4> sigma = {
        Mat2{{1, 0, 0, 1}},
        Mat2{{0, 1, 1, 0}},
        Mat2{{0, cplx(0, -1), cplx(0, 1), 0}},
        Mat2{{1, 0, 0, -1}},
    };
    return sigma[static_cast<std::size_t>(a)];
}

// Coefficients of M in the Pauli basis: M = c0*I + c1*s1 + c2*s2 + c3*s3.
inline std::array<cplx, 4> pauli_components(const Mat2& m) {
    return {m.trace() / 2.0,
            (m.a[1] + m.a[2]) / 2.0,
            (m.a[2] - m.a[1]) * cplx(0, -0.5),
            (m.a[0] - m.a[3]) / 2.0};
}

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// Throws SingularMatch when the pivot falls below `pivot_tol` relative to
// the largest entry of A.
inline std::vector<cplx> solve_dense(std::vector<std::vector<cplx>> A, std::vector<cplx> b,
                                     double pivot_tol = 1e-12) {
    const std::size_t n = A.size();
    double scale = 0.0;
    for (const auto& row : A)
        for (const auto& x : row) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) throw SingularMatch("zero coefficient matrix");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(A[r][c]) > std::abs(A[p][c])) p = r;
        if (std::abs(A[p][c]) < pivot_tol * scale)
            throw SingularMatch("coefficient-matching system is singular");
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            cplx f = A[r][c] / A[c][c];
            if (f == cplx(0)) continue;
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<cplx> x(n);
    for (std::size_t i = n; i-- > 0;) {
        cplx s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= A[i][k] * x[k];
        x[i] = s / A[i][i];
    }
    return x;
}

// Least squares min ||A x - y|| via normal equations; returns (x, residual)
// where residual = max_i |A x - y|_i.
inline std::pair<std::vector<cplx>, double> least_squares(const std::vector<std::vector<cplx>>& A,
                                                          const std::vector<cplx>& y) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    std::vector<std::vector<cplx>> AtA(n, std::vector<cplx>(n, cplx(0)));
    std::vector<cplx> Aty(n, cplx(0));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            Aty[i] += std::conj(A[r][i]) * y[r];
            for (std::size_t j = 0; j < n; ++j) AtA[i][j] += std::conj(A[r][i]) * A[r][j];
        }
    }
    std::vector<cplx> x = solve_dense(std::move(AtA), std::move(Aty));
    double res = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
        cplx s = -y[r];
        for (std::size_t i = 0; i < n; ++i) s += A[r][i] * x[i];
        res = std::max(res, std::abs(s));
    }
    return {std::move(x), res};
}

} // namespace skly

#endif
