// SPDX-License-Identifier: Apache-2.0
//
// Exact multivariate polynomial arithmetic in the ring Q[J31, J32][t0..t3].
// Coefficients are exact rationals; J31 and J32 are formal parameters, so
// identities verified here hold identically in the parameters, with no
// floating point anywhere.
#ifndef SKLY_POLYNOMIAL_HPP
#define SKLY_POLYNOMIAL_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "skly/errors.hpp"

namespace skly {

using Rational = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

// Monomial J31^e1 * J32^e2 in the parameters.
struct JMono {
    unsigned e31 = 0;
    unsigned e32 = 0;
    friend bool operator==(const JMono&, const JMono&) = default;
};

// Graded lexicographic, larger first (so map iteration is display order).
struct JMonoOrder {
    bool operator()(const JMono& a, const JMono& b) const {
        unsigned da = a.e31 + a.e32, db = b.e31 + b.e32;
        if (da != db) return da > db;
        if (a.e31 != b.e31) return a.e31 > b.e31;
        return a.e32 > b.e32;
    }
};

// Monomial t0^e0 * t1^e1 * t2^e2 * t3^e3.
struct TMono {
    std::array<unsigned, 4> e{0, 0, 0, 0};
    unsigned degree() const { return e[0] + e[1] + e[2] + e[3]; }
    friend bool operator==(const TMono&, const TMono&) = default;
};

struct TMonoOrder {
    bool operator()(const TMono& a, const TMono& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.e > b.e; // lexicographic on exponents, larger first
    }
};

// Polynomial in J31, J32 over Q; the coefficient ring.
class JPoly {
  public:
    JPoly() = default;
    explicit JPoly(Rational c) {
        if (c != 0) terms_[JMono{}] = std::move(c);
    }
    static JPoly param31() { return monomial({1, 0}, 1); }
    static JPoly param32() { return monomial({0, 1}, 1); }
    static JPoly monomial(JMono m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<JMono, Rational, JMonoOrder>& terms() const { return terms_; }

    JPoly& operator+=(const JPoly& o);
    JPoly& operator-=(const JPoly& o);
    JPoly operator+(const JPoly& o) const {
        JPoly r = *this;
        r += o;
        return r;
    }
    JPoly operator-(const JPoly& o) const {
        JPoly r = *this;
        r -= o;
        return r;
    }
    JPoly operator*(const JPoly& o) const;
    JPoly operator-() const;

    cplx eval(cplx j31, cplx j32) const;

    friend bool operator==(const JPoly&, const JPoly&) = default;

  private:
    std::map<JMono, Rational, JMonoOrder> terms_;
};

// Polynomial in t0..t3 with JPoly coefficients.
class ParamPolynomial {
  public:
    ParamPolynomial() = default;

    static ParamPolynomial constant(Rational c) { return from_jpoly(JPoly(std::move(c))); }
    static ParamPolynomial from_jpoly(JPoly c);
    // t_a for a in 0..3
    static ParamPolynomial variable(int a);
    static ParamPolynomial param_j31() { return from_jpoly(JPoly::param31()); }
    static ParamPolynomial param_j32() { return from_jpoly(JPoly::param32()); }
    static ParamPolynomial monomial(TMono m, JPoly c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<TMono, JPoly, TMonoOrder>& terms() const { return terms_; }

    ParamPolynomial& operator+=(const ParamPolynomial& o);
    ParamPolynomial& operator-=(const ParamPolynomial& o);
    ParamPolynomial operator+(const ParamPolynomial& o) const {
        ParamPolynomial r = *this;
        r += o;
        return r;
    }
    ParamPolynomial operator-(const ParamPolynomial& o) const {
        ParamPolynomial r = *this;
        r -= o;
        return r;
    }
    ParamPolynomial operator*(const ParamPolynomial& o) const;
    ParamPolynomial operator-() const;

    // Partial derivative with respect to t_a.
    ParamPolynomial derivative(int a) const;

    // True when every monomial has total t-degree d (the zero polynomial
    // is homogeneous of every degree).
    bool is_homogeneous(unsigned d) const;

    // Numeric evaluation at complex t and parameter values.
    cplx eval(const std::array<cplx, 4>& t, cplx j31, cplx j32) const;

    // Canonical text form, e.g. "(4)*J32*t2*t3"; terms in monomial order,
    // coefficients as exact fractions.  parse() inverts it.
    std::string to_string() const;
    static ParamPolynomial parse(const std::string& text);

    friend bool operator==(const ParamPolynomial&, const ParamPolynomial&) = default;

  private:
    std::map<TMono, JPoly, TMonoOrder> terms_;
};

} // namespace skly

#endif
