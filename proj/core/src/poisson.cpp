// SPDX-License-Identifier: Apache-2.0
#include "skly/poisson.hpp"

#include <vector>

namespace skly {

namespace {

// Determinant of an n x n matrix of polynomials by cofactor expansion
// along the first column.
ParamPolynomial poly_det(const std::vector<std::vector<ParamPolynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    ParamPolynomial acc;
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<ParamPolynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        ParamPolynomial term = m[r][0] * poly_det(minor);
        if (r % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace

QuadraticBivector QuadraticBivector::from_upper(const std::array<ParamPolynomial, 6>& upper) {
    QuadraticBivector b;
    int idx = 0;
    for (int a = 0; a < 4; ++a)
        for (int c = a + 1; c < 4; ++c) {
            b.comp_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] =
                upper[static_cast<std::size_t>(idx)];
            b.comp_[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] =
                -upper[static_cast<std::size_t>(idx)];
            ++idx;
        }
    return b;
}

QuadraticBivector QuadraticBivector::from_casimirs(const ParamPolynomial& c1,
                                                   const ParamPolynomial& c2) {
    const bool quadratic = c1.is_homogeneous(2) && c2.is_homogeneous(2);
    std::array<ParamPolynomial, 6> upper;
    int idx = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            upper[static_cast<std::size_t>(idx)] =
                jacobian_bracket(c1, c2, ParamPolynomial::variable(a), ParamPolynomial::variable(b));
            if (quadratic && !upper[static_cast<std::size_t>(idx)].is_homogeneous(2))
                throw InvalidInput("bracket entry is not homogeneous of degree 2");
            ++idx;
        }
    return from_upper(upper);
}

ParamPolynomial QuadraticBivector::bracket(const ParamPolynomial& f,
                                           const ParamPolynomial& g) const {
    std::array<ParamPolynomial, 4> df, dg;
    for (int a = 0; a < 4; ++a) {
        df[static_cast<std::size_t>(a)] = f.derivative(a);
        dg[static_cast<std::size_t>(a)] = g.derivative(a);
    }
    ParamPolynomial acc;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const ParamPolynomial& p = entry(a, b);
            if (p.is_zero()) continue;
            acc += p * df[static_cast<std::size_t>(a)] * dg[static_cast<std::size_t>(b)];
        }
    return acc;
}

std::pair<ParamPolynomial, ParamPolynomial> sklyanin_casimirs() {
    auto t0 = ParamPolynomial::variable(0);
    auto t1 = ParamPolynomial::variable(1);
    auto t2 = ParamPolynomial::variable(2);
    auto t3 = ParamPolynomial::variable(3);
    ParamPolynomial c1 = t0 * t0 + ParamPolynomial::param_j31() * t1 * t1 +
                         ParamPolynomial::param_j32() * t2 * t2;
    ParamPolynomial c2 = t1 * t1 + t2 * t2 + t3 * t3;
    return {c1, c2};
}

ParamPolynomial jacobian_bracket(const ParamPolynomial& c1, const ParamPolynomial& c2,
                                 const ParamPolynomial& f, const ParamPolynomial& g) {
    std::vector<std::vector<ParamPolynomial>> jac(4, std::vector<ParamPolynomial>(4));
    const ParamPolynomial* rows[4] = {&c1, &c2, &f, &g};
    for (std::size_t r = 0; r < 4; ++r)
        for (int a = 0; a < 4; ++a)
            jac[r][static_cast<std::size_t>(a)] = rows[r]->derivative(a);
    return poly_det(jac);
}

std::array<ParamPolynomial, 4> schouten_jacobi_residual(const QuadraticBivector& b) {
    static const int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    std::array<ParamPolynomial, 4> out;
    for (int i = 0; i < 4; ++i) {
        int ia = triples[i][0], ib = triples[i][1], ic = triples[i][2];
        ParamPolynomial acc;
        const int cyc[3][3] = {{ia, ib, ic}, {ib, ic, ia}, {ic, ia, ib}};
        for (const auto& abc : cyc) {
            // {t_a, {t_b, t_c}} = sum_d entry(a,d) * d/dt_d entry(b,c)
            for (int d = 0; d < 4; ++d) {
                const ParamPolynomial& pad = b.entry(abc[0], d);
                if (pad.is_zero()) continue;
                acc += pad * b.entry(abc[1], abc[2]).derivative(d);
            }
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::array<ParamPolynomial, 4> casimir_residual(const QuadraticBivector& b,
                                                const ParamPolynomial& f) {
    std::array<ParamPolynomial, 4> out;
    for (int a = 0; a < 4; ++a) {
        ParamPolynomial acc;
        for (int c = 0; c < 4; ++c) {
            const ParamPolynomial& p = b.entry(c, a);
            if (p.is_zero()) continue;
            acc += p * f.derivative(c);
        }
        out[static_cast<std::size_t>(a)] = acc;
    }
    return out;
}

} // namespace skly
