// SPDX-License-Identifier: Apache-2.0
//
// Numerical rank-2 simple-pole realization: the matrix family
// phi(lambda) = t0 I + (1/i) sum t_a w_a(lambda) sigma_a, the determinant
// identity, the principal-part splitting P_+ through the 6-element basis
// {w_a sigma_a, w_a' sigma_a}, and the bivector
//   Pi(psi) = -P_+(pr(phi psi)) phi + phi P_+(pr(psi phi))
// assembled against the dual covector basis and expanded over
// {I, (1/i) w_a sigma_a}.
#ifndef SKLY_SKLYANIN_HPP
#define SKLY_SKLYANIN_HPP

#include <array>
#include <functional>

#include "skly/elliptic.hpp"
#include "skly/linalg.hpp"

namespace skly {

struct EndomorphismPoint {
    std::array<cplx, 4> t{};
    CurvePtr curve;
};

// Covector representative on the annulus around e: a finite Laurent tail
// of a 2x2 matrix-valued function.  The dual basis is psi^0 = (1/2) z^-1 I
// and psi^a = (i/2) sigma_a, biorthogonal to {I, (1/i) w_a sigma_a} under
// the residue pairing Res_0 tr(psi e) dz.
struct CovectorRep {
    enum class Label { psi0, psi1, psi2, psi3, custom };
    Label label = Label::custom;
    std::vector<std::pair<int, Mat2>> laurent_tail; // (order, coefficient)

    Mat2 eval(cplx zeta) const;
    static CovectorRep dual_basis(int alpha);
};

// Orders -2 and -1 of a trace-free matrix-valued function at e.
struct PrincipalPart {
    Mat2 c_m2; // zeta^-2 coefficient
    Mat2 c_m1; // zeta^-1 coefficient

    // Checks both coefficients are trace-free within `trace_tol` relative.
    static PrincipalPart make(const Mat2& c_m2, const Mat2& c_m1, double trace_tol = 1e-10);
};

// The meromorphic section with poles only at e: sum over a of
// alpha_a w_a sigma_a + beta_a w_a' sigma_a.
struct GlobalSection {
    std::array<cplx, 3> alpha{}; // w_a sigma_a coefficients
    std::array<cplx, 3> beta{};  // w_a' sigma_a coefficients
    CurvePtr curve;

    Mat2 eval(cplx lambda) const;
};

struct SklyaninOptions {
    int quadrature_samples = 256;
    double quadrature_tol = 1e-9;
    double fit_tol = 1e-7;        // pole-cancellation / basis-fit certificate
    double trace_tol = 1e-10;
};

// phi(lambda) as a 2x2 matrix; PoleEvaluation at torsion points.
Mat2 phi_matrix(const EndomorphismPoint& p, cplx lambda);

// det phi(lambda) - [C1(t) + C2(t) w3(lambda)^2] with the measured J
// constants; magnitudes below ~1e-9 certify the determinant identity.
cplx det_identity_residual(const EndomorphismPoint& p, cplx lambda);

// Extracts the principal part of a matrix-valued function at e by contour
// quadrature.
PrincipalPart principal_part(const std::function<Mat2(cplx)>& f, const LatticeCurve& curve,
                             const SklyaninOptions& opt = {});

// The unique global trace-free section with poles only at e matching the
// given principal part, found by matching Laurent coefficients of orders
// -2 and -1 against the 6-element basis.  Throws SingularMatch if the
// matching system is ill-conditioned.
GlobalSection split_p_plus(const PrincipalPart& pp, const CurvePtr& curve,
                           const SklyaninOptions& opt = {});

// Residue pairing matrix <psi^alpha, e_beta>; identity within pairing_tol
// on a healthy elliptic layer.
std::array<std::array<cplx, 4>, 4> pairing_matrix(const LatticeCurve& curve,
                                                  const SklyaninOptions& opt = {});

using BivectorMatrix = std::array<std::array<cplx, 4>, 4>;

struct BivectorDiagnostics {
    double fit_residual = 0.0;        // max over covectors, absolute
    double antisymmetry = 0.0;        // max |Pi + Pi^T| entry
};

// The coefficient matrix Pi^{alpha,beta} of the bivector in the basis
// {I, (1/i) w_a sigma_a}, one row per dual covector.  The least-squares
// fit residual doubles as the certificate that higher-order poles cancel;
// FitResidualExceeded when it is above fit_tol.
BivectorMatrix bivector_poi3(const EndomorphismPoint& p, const SklyaninOptions& opt = {},
                             BivectorDiagnostics* diag = nullptr);

} // namespace skly

#endif
