// SPDX-License-Identifier: Apache-2.0
//
// Complex elliptic curve arithmetic: lattice reduction, Jacobi elliptic
// functions evaluated through theta-quotient series, the residue-normalized
// meromorphic basis functions w_a, Laurent coefficients by contour
// quadrature, and divisor-class checks on the curve.
#ifndef SKLY_ELLIPTIC_HPP
#define SKLY_ELLIPTIC_HPP

#include <complex>
#include <functional>
#include <memory>
#include <tuple>
#include <vector>

#include "skly/errors.hpp"

namespace skly {

using cplx = std::complex<double>;

// C/(1/s)(Z + Z tau).  The functions w_a live on the covering torus
// C/(Z + Z tau); their poles are the s^2 torsion points (i + j*tau)/s.
// Only s = 2 carries the rank-2 function theory; the lattice machinery
// is generic.
class LatticeCurve {
  public:
    // Factory; validates Im(tau) > 0 and precomputes the theta constants.
    static std::shared_ptr<const LatticeCurve> make(cplx tau, int subdivision = 2);

    cplx tau() const { return tau_; }
    int subdivision() const { return s_; }
    cplx modulus_k() const { return k_; }

    // Nome q = exp(i*pi*tau).
    cplx nome() const { return q_; }
    // Quarter period K of the associated sn lattice; rho = 4K is the
    // normalization constant making Res_0 w_a = 1.
    cplx quarter_period() const { return bigK_; }
    cplx rho() const { return rho_; }

    // Lattice basis of the curve itself: (1/s, tau/s).
    cplx omega1() const { return cplx(1.0, 0.0) / static_cast<double>(s_); }
    cplx omega2() const { return tau_ / static_cast<double>(s_); }

    // Distance from z to the nearest point of the lattice spanned by
    // (w1, w2).  Used for point equality and pole proximity checks.
    static double lattice_distance(cplx z, cplx w1, cplx w2);

    // Reduce z into the fundamental cell [0,1) x [0,1) of (w1, w2).
    static cplx lattice_reduce(cplx z, cplx w1, cplx w2);

    // Torsion points of the covering torus: representatives (i + j*tau)/s.
    const std::vector<cplx>& covering_torsion_points() const { return torsion_; }
    // Minimal distance between distinct covering torsion points; sets the
    // scale of all quadrature radii.
    double torsion_separation() const { return torsion_sep_; }

    bool same_curve(const LatticeCurve& o) const {
        return s_ == o.s_ && tau_ == o.tau_;
    }

    // Theta constants theta_j(0 | tau), cached at construction.
    cplx theta2_0() const { return th2_; }
    cplx theta3_0() const { return th3_; }
    cplx theta4_0() const { return th4_; }

  private:
    LatticeCurve() = default;
    cplx tau_;
    int s_ = 2;
    cplx q_;
    cplx k_;
    cplx bigK_;
    cplx rho_;
    cplx th2_, th3_, th4_;
    std::vector<cplx> torsion_;
    double torsion_sep_ = 0.0;
};

using CurvePtr = std::shared_ptr<const LatticeCurve>;

// A point of the curve C/(1/s)Lambda, stored as the fundamental-domain
// representative.  Equality is lattice equality within `tol`.
class CurvePoint {
  public:
    CurvePoint() = default;
    CurvePoint(cplx z, CurvePtr curve);

    cplx z() const { return z_; }
    const CurvePtr& curve() const { return curve_; }

    bool equals(const CurvePoint& other, double tol = 1e-9) const;
    CurvePoint negate() const { return CurvePoint(-z_, curve_); }

  private:
    cplx z_{};
    CurvePtr curve_;
};

// Effective or virtual divisor: distinct points with integer multiplicities.
class Divisor {
  public:
    Divisor() = default;
    // Merges repeated points and drops zero multiplicities.
    explicit Divisor(std::vector<std::pair<CurvePoint, int>> entries);

    const std::vector<std::pair<CurvePoint, int>>& entries() const { return entries_; }
    int degree() const;
    // Weighted point sum, the Abel-Jacobi image before lattice reduction.
    cplx weighted_sum() const;
    const CurvePtr& curve() const;

    Divisor scaled(int m) const;

  private:
    std::vector<std::pair<CurvePoint, int>> entries_;
};

// Jacobi sn, cn, dn at `lambda` (standard argument convention: sn(K) = 1)
// with elliptic modulus `k`, via theta quotients in the nome.
// Throws PoleEvaluation within `pole_tol` of a pole and NonconvergentSeries
// when the theta series fails to settle within the iteration budget.
std::tuple<cplx, cplx, cplx> jacobi_sn_cn_dn(cplx lambda, cplx k, double pole_tol = 1e-9);

// The three normalized functions w_1 = rho/sn, w_2 = rho*dn/sn,
// w_3 = rho*cn/sn, rescaled so each has residue 1 at z = 0 and poles
// exactly at the 2-torsion points of the covering torus.
std::tuple<cplx, cplx, cplx> w_functions(cplx lambda, const LatticeCurve& curve,
                                         double pole_tol = 1e-9);

// Derivatives w_a'; exact through the quadratic relations among the w_a.
std::tuple<cplx, cplx, cplx> w_derivatives(cplx lambda, const LatticeCurve& curve,
                                           double pole_tol = 1e-9);

// The constants J21 = w1^2 - w2^2, J31 = w1^2 - w3^2, J32 = w2^2 - w3^2,
// measured by sampling and averaging; J21 is returned as J31 - J32 exactly.
// Throws NonconstantDifference when the sampled differences vary beyond
// `constancy_tol`.
std::tuple<cplx, cplx, cplx> j_constants(const LatticeCurve& curve,
                                         double constancy_tol = 1e-9);

struct LaurentOptions {
    int samples = 256;      // doubled once for the convergence check
    double radius = 0.1;    // circle radius around the center
    double divergence_tol = 1e-9;
};

// Laurent coefficients c_n of f around `center` for n in [order_min, order_max],
// by trapezoid contour quadrature on a circle.  The integrand must be
// holomorphic on the sampling annulus.  Throws QuadratureDivergence when the
// two-resolution estimates disagree.
std::vector<cplx> laurent_coefficients(const std::function<cplx(cplx)>& f, cplx center,
                                       int order_min, int order_max,
                                       const LaurentOptions& opt = {});

// Abel's criterion on an elliptic curve: equal degrees and weighted point
// sums congruent modulo the curve lattice.
bool abel_jacobi_equivalent(const Divisor& d1, const Divisor& d2, double tol = 1e-8);

} // namespace skly

#endif
