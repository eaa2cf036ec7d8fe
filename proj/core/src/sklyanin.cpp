// SPDX-License-Identifier: Apache-2.0
#include "skly/sklyanin.hpp"

#include <cmath>

namespace skly {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kMinusI(0, -1); // 1/i

double quadrature_radius(const LatticeCurve& curve) {
    return curve.torsion_separation() / 4.0;
}

// Laurent coefficients of several scalar functions sharing one sampling
// pass; F(zeta) returns all function values at once.  Two resolutions with
// a divergence check, like the scalar entry point.
std::vector<std::vector<cplx>> laurent_multi(const std::function<std::vector<cplx>(cplx)>& F,
                                             std::size_t nfunc, cplx center, int omin, int omax,
                                             double radius, int samples, double tol) {
    auto pass = [&](int N) {
        std::vector<std::vector<cplx>> coef(nfunc,
                                            std::vector<cplx>(static_cast<std::size_t>(omax - omin + 1), cplx(0)));
        for (int j = 0; j < N; ++j) {
            double th = 2.0 * kPi * j / N;
            cplx unit = std::exp(cplx(0, th));
            std::vector<cplx> vals = F(center + radius * unit);
            for (int o = omin; o <= omax; ++o) {
                cplx weight = std::pow(radius, -o) * std::pow(unit, -o);
                for (std::size_t f = 0; f < nfunc; ++f)
                    coef[f][static_cast<std::size_t>(o - omin)] += vals[f] * weight;
            }
        }
        for (auto& row : coef)
            for (auto& c : row) c /= static_cast<double>(N);
        return coef;
    };
    auto coarse = pass(samples);
    auto fine = pass(2 * samples);
    double scale = 1.0;
    for (const auto& row : fine)
        for (const auto& c : row) scale = std::max(scale, std::abs(c));
    for (std::size_t f = 0; f < nfunc; ++f)
        for (std::size_t o = 0; o < fine[f].size(); ++o)
            if (std::abs(fine[f][o] - coarse[f][o]) > tol * scale)
                throw QuadratureDivergence("matrix contour quadrature did not converge");
    return fine;
}

struct SplitContext {
    std::vector<std::vector<cplx>> matrix; // 6x6 coefficient-matching system
    CurvePtr curve;
};

// Rows: orders (-2, -1) x Pauli components (1..3); columns: the basis
// {w_1 s1, w_2 s2, w_3 s3, w_1' s1, w_2' s2, w_3' s3}.  Only the diagonal
// Pauli blocks are nonzero, but the full system is solved as a matching
// problem so a broken Laurent layer surfaces as SingularMatch.
SplitContext make_split_context(const CurvePtr& curve, const SklyaninOptions& opt) {
    auto F = [&](cplx z) {
        auto [w1, w2, w3] = w_functions(z, *curve);
        return std::vector<cplx>{w1, w2, w3, -w2 * w3, -w1 * w3, -w1 * w2};
    };
    auto coef = laurent_multi(F, 6, cplx(0, 0), -2, -1, quadrature_radius(*curve),
                              opt.quadrature_samples, opt.quadrature_tol);
    SplitContext ctx;
    ctx.curve = curve;
    ctx.matrix.assign(6, std::vector<cplx>(6, cplx(0)));
    for (int a = 0; a < 3; ++a)
        for (int kind = 0; kind < 2; ++kind) {
            std::size_t col = static_cast<std::size_t>(3 * kind + a);
            // row (order -2, pauli a) and row (order -1, pauli a)
            ctx.matrix[static_cast<std::size_t>(a)][col] = coef[col][0];
            ctx.matrix[static_cast<std::size_t>(3 + a)][col] = coef[col][1];
        }
    return ctx;
}

GlobalSection split_with(const SplitContext& ctx, const PrincipalPart& pp) {
    auto cm2 = pauli_components(pp.c_m2);
    auto cm1 = pauli_components(pp.c_m1);
    std::vector<cplx> rhs = {cm2[1], cm2[2], cm2[3], cm1[1], cm1[2], cm1[3]};
    std::vector<cplx> x = solve_dense(ctx.matrix, std::move(rhs), 1e-8);
    GlobalSection g;
    g.curve = ctx.curve;
    for (int a = 0; a < 3; ++a) {
        g.alpha[static_cast<std::size_t>(a)] = x[static_cast<std::size_t>(a)];
        g.beta[static_cast<std::size_t>(a)] = x[static_cast<std::size_t>(3 + a)];
    }
    return g;
}

} // namespace

// ---------------------------------------------------------------------------

Mat2 CovectorRep::eval(cplx zeta) const {
    Mat2 m = Mat2::zero();
    for (const auto& [order, coef] : laurent_tail)
        m = m + coef * std::pow(zeta, order);
    return m;
}

CovectorRep CovectorRep::dual_basis(int alpha) {
    if (alpha < 0 || alpha > 3) throw InvalidInput("covector index out of range");
    CovectorRep c;
    if (alpha == 0) {
        c.label = Label::psi0;
        c.laurent_tail = {{-1, 0.5 * Mat2::identity()}};
    } else {
        c.label = static_cast<Label>(alpha);
        c.laurent_tail = {{0, cplx(0, 0.5) * pauli(alpha)}};
    }
    return c;
}

PrincipalPart PrincipalPart::make(const Mat2& c_m2, const Mat2& c_m1, double trace_tol) {
    double scale = std::max(1.0, std::max(c_m2.max_abs(), c_m1.max_abs()));
    if (std::abs(c_m2.trace()) > trace_tol * scale || std::abs(c_m1.trace()) > trace_tol * scale)
        throw InvalidInput("principal part coefficients must be trace-free");
    return {c_m2, c_m1};
}

Mat2 GlobalSection::eval(cplx lambda) const {
    auto [w1, w2, w3] = w_functions(lambda, *curve);
    const cplx w[3] = {w1, w2, w3};
    const cplx wp[3] = {-w2 * w3, -w1 * w3, -w1 * w2};
    Mat2 m = Mat2::zero();
    for (int a = 0; a < 3; ++a)
        m = m + (alpha[static_cast<std::size_t>(a)] * w[a] +
                 beta[static_cast<std::size_t>(a)] * wp[a]) *
                    pauli(a + 1);
    return m;
}

Mat2 phi_matrix(const EndomorphismPoint& p, cplx lambda) {
    if (!p.curve) throw InvalidInput("endomorphism point requires a curve");
    auto [w1, w2, w3] = w_functions(lambda, *p.curve);
    Mat2 m = p.t[0] * Mat2::identity();
    const cplx w[3] = {w1, w2, w3};
    for (int a = 0; a < 3; ++a)
        m = m + kMinusI * p.t[static_cast<std::size_t>(a + 1)] * w[a] * pauli(a + 1);
    return m;
}

cplx det_identity_residual(const EndomorphismPoint& p, cplx lambda) {
    auto [j21, j31, j32] = j_constants(*p.curve);
    auto [w1, w2, w3] = w_functions(lambda, *p.curve);
    const cplx t0 = p.t[0], t1 = p.t[1], t2 = p.t[2], t3 = p.t[3];
    cplx c1 = t0 * t0 + j31 * t1 * t1 + j32 * t2 * t2;
    cplx c2 = t1 * t1 + t2 * t2 + t3 * t3;
    return phi_matrix(p, lambda).det() - (c1 + c2 * w3 * w3);
}

PrincipalPart principal_part(const std::function<Mat2(cplx)>& f, const LatticeCurve& curve,
                             const SklyaninOptions& opt) {
    auto F = [&](cplx z) {
        Mat2 m = f(z);
        return std::vector<cplx>(m.a.begin(), m.a.end());
    };
    auto coef = laurent_multi(F, 4, cplx(0, 0), -2, -1, quadrature_radius(curve),
                              opt.quadrature_samples, opt.quadrature_tol);
    Mat2 cm2{{coef[0][0], coef[1][0], coef[2][0], coef[3][0]}};
    Mat2 cm1{{coef[0][1], coef[1][1], coef[2][1], coef[3][1]}};
    return PrincipalPart::make(cm2, cm1, opt.trace_tol);
}

GlobalSection split_p_plus(const PrincipalPart& pp, const CurvePtr& curve,
                           const SklyaninOptions& opt) {
    if (!curve) throw InvalidInput("split requires a curve");
    return split_with(make_split_context(curve, opt), pp);
}

std::array<std::array<cplx, 4>, 4> pairing_matrix(const LatticeCurve& curve,
                                                  const SklyaninOptions& opt) {
    std::array<CovectorRep, 4> psi;
    for (int a = 0; a < 4; ++a) psi[static_cast<std::size_t>(a)] = CovectorRep::dual_basis(a);
    auto F = [&](cplx z) {
        auto [w1, w2, w3] = w_functions(z, curve);
        const cplx w[3] = {w1, w2, w3};
        std::array<Mat2, 4> e;
        e[0] = Mat2::identity();
        for (int b = 1; b < 4; ++b) e[static_cast<std::size_t>(b)] = kMinusI * w[b - 1] * pauli(b);
        std::vector<cplx> out;
        out.reserve(16);
        for (int a = 0; a < 4; ++a) {
            Mat2 pa = psi[static_cast<std::size_t>(a)].eval(z);
            for (int b = 0; b < 4; ++b) out.push_back((pa * e[static_cast<std::size_t>(b)]).trace());
        }
        return out;
    };
    auto coef = laurent_multi(F, 16, cplx(0, 0), -1, -1, quadrature_radius(curve),
                              opt.quadrature_samples, opt.quadrature_tol);
    std::array<std::array<cplx, 4>, 4> out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                coef[static_cast<std::size_t>(4 * a + b)][0];
    return out;
}

BivectorMatrix bivector_poi3(const EndomorphismPoint& p, const SklyaninOptions& opt,
                             BivectorDiagnostics* diag) {
    if (!p.curve) throw InvalidInput("endomorphism point requires a curve");
    double tmax = 0.0;
    for (const auto& c : p.t) tmax = std::max(tmax, std::abs(c));
    if (tmax == 0.0) throw InvalidInput("bivector needs a nonzero endomorphism point");

    const LatticeCurve& curve = *p.curve;
    SplitContext ctx = make_split_context(p.curve, opt);

    // deterministic fit points on two circles, clear of every torsion point
    const double sep = curve.torsion_separation();
    std::vector<cplx> fit_points;
    for (int j = 0; j < 6; ++j) {
        double th = 2.0 * kPi * (j + 0.37) / 6.0;
        fit_points.push_back(0.35 * sep * std::exp(cplx(0, th)));
        fit_points.push_back(0.55 * sep * std::exp(cplx(0, th + 0.21)));
    }

    BivectorMatrix pi{};
    double worst_fit = 0.0;
    for (int alpha = 0; alpha < 4; ++alpha) {
        CovectorRep psi = CovectorRep::dual_basis(alpha);
        auto left = [&](cplx z) { return trace_free(phi_matrix(p, z) * psi.eval(z)); };
        auto right = [&](cplx z) { return trace_free(psi.eval(z) * phi_matrix(p, z)); };
        GlobalSection gl = split_with(ctx, principal_part(left, curve, opt));
        GlobalSection gr = split_with(ctx, principal_part(right, curve, opt));

        // expand -P+(pr(phi psi)) phi + phi P+(pr(psi phi)) over {I, (1/i) w_b sigma_b}
        std::vector<std::vector<cplx>> A;
        std::vector<cplx> y;
        double sample_scale = 1.0;
        for (const cplx& lam : fit_points) {
            Mat2 phi = phi_matrix(p, lam);
            Mat2 val = -(gl.eval(lam) * phi) + phi * gr.eval(lam);
            auto [w1, w2, w3] = w_functions(lam, curve);
            const cplx w[3] = {w1, w2, w3};
            std::array<Mat2, 4> basis;
            basis[0] = Mat2::identity();
            for (int b = 1; b < 4; ++b) basis[static_cast<std::size_t>(b)] = kMinusI * w[b - 1] * pauli(b);
            for (int entry = 0; entry < 4; ++entry) {
                std::vector<cplx> row(4);
                for (int b = 0; b < 4; ++b)
                    row[static_cast<std::size_t>(b)] = basis[static_cast<std::size_t>(b)].a[static_cast<std::size_t>(entry)];
                A.push_back(std::move(row));
                y.push_back(val.a[static_cast<std::size_t>(entry)]);
                sample_scale = std::max(sample_scale, std::abs(val.a[static_cast<std::size_t>(entry)]));
            }
        }
        auto [x, res] = least_squares(A, y);
        if (res > opt.fit_tol * sample_scale)
            throw FitResidualExceeded("bivector expansion residual exceeds tolerance");
        worst_fit = std::max(worst_fit, res / sample_scale);
        for (int b = 0; b < 4; ++b)
            pi[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(b)] = x[static_cast<std::size_t>(b)];
    }

    if (diag) {
        diag->fit_residual = worst_fit;
        double anti = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                anti = std::max(anti, std::abs(pi[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +
                                               pi[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]));
        diag->antisymmetry = anti;
    }
    return pi;
}

} // namespace skly
