// SPDX-License-Identifier: Apache-2.0
//
// The determinant (Jacobian) bracket built from two Casimirs on C^4 and the
// exact symbolic verifiers: Jacobiator residuals for the Jacobi identity and
// bracket residuals for the Casimir property.
#ifndef SKLY_POISSON_HPP
#define SKLY_POISSON_HPP

#include <array>

#include "skly/polynomial.hpp"

namespace skly {

// Antisymmetric 4x4 matrix of brackets {t_a, t_b}.
class QuadraticBivector {
  public:
    // Builds from the strict upper triangle; fills the rest by antisymmetry.
    static QuadraticBivector from_upper(const std::array<ParamPolynomial, 6>& upper);

    // Entries {t_a, t_b} = det d(C1,C2,t_a,t_b)/d(t0..t3).  When both
    // Casimirs are quadratic every entry is checked to be homogeneous of
    // degree 2.
    static QuadraticBivector from_casimirs(const ParamPolynomial& c1, const ParamPolynomial& c2);

    const ParamPolynomial& entry(int a, int b) const {
        return comp_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    // Bracket {f, g} = sum_ab entry(a,b) * df/dt_a * dg/dt_b.
    ParamPolynomial bracket(const ParamPolynomial& f, const ParamPolynomial& g) const;

  private:
    std::array<std::array<ParamPolynomial, 4>, 4> comp_;
};

// The two components of the rank-2 determinant map:
// C1 = t0^2 + J31 t1^2 + J32 t2^2,  C2 = t1^2 + t2^2 + t3^2.
std::pair<ParamPolynomial, ParamPolynomial> sklyanin_casimirs();

// det d(C1, C2, f, g)/d(t0, t1, t2, t3), expanded exactly by cofactors
// along the first column.
ParamPolynomial jacobian_bracket(const ParamPolynomial& c1, const ParamPolynomial& c2,
                                 const ParamPolynomial& f, const ParamPolynomial& g);

// Jacobiator sum_cyclic {t_a, {t_b, t_c}} for the four index triples
// (0,1,2), (0,1,3), (0,2,3), (1,2,3).  All-zero certifies the Jacobi
// identity identically in J31, J32.
std::array<ParamPolynomial, 4> schouten_jacobi_residual(const QuadraticBivector& b);

// The four brackets {f, t_a}; all zero iff f is a Casimir of b.
std::array<ParamPolynomial, 4> casimir_residual(const QuadraticBivector& b,
                                                const ParamPolynomial& f);

} // namespace skly

#endif
