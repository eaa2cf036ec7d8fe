// SPDX-License-Identifier: Apache-2.0
#ifndef SKLY_ERRORS_HPP
#define SKLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skly {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation was requested at (or too close to) a pole.
struct PoleEvaluation : Error {
    using Error::Error;
};

// An internal series or iteration failed to converge within its budget.
struct NonconvergentSeries : Error {
    using Error::Error;
};

// The two-resolution contour quadrature estimates disagree beyond tolerance.
struct QuadratureDivergence : Error {
    using Error::Error;
};

// Operands refer to different curves.
struct CurveMismatch : Error {
    using Error::Error;
};

// Sampled values of w_a^2 - w_b^2 are not constant; the elliptic layer is broken.
struct NonconstantDifference : Error {
    using Error::Error;
};

// The principal-part matching system is numerically singular.
struct SingularMatch : Error {
    using Error::Error;
};

// A basis-expansion residual exceeded its tolerance.
struct FitResidualExceeded : Error {
    using Error::Error;
};

// The (H^0, H^1) pair cannot occur as (kernel, cokernel) of any endomorphism.
struct UnrealizablePair : Error {
    using Error::Error;
};

// The integer sequence is not the length sequence of any partition.
struct InvalidLengthSequence : Error {
    using Error::Error;
};

// No residue class alpha satisfies the congruence v1 = alpha * v2.
struct NoSolution : Error {
    using Error::Error;
};

// d/r is not a reduced fraction in (0, 1).
struct InvalidFraction : Error {
    using Error::Error;
};

// Generic precondition failure on user-supplied data.
struct InvalidInput : Error {
    using Error::Error;
};

// Text input could not be parsed; carries the offending token and position.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position, std::string token)
        : Error(msg), position(position), token(std::move(token)) {}
    std::size_t position;
    std::string token;
};

} // namespace skly

#endif
