// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skly/polynomial.hpp"

using namespace skly;

namespace {

ParamPolynomial random_poly(oracles::SplitMix& rng, int max_deg, int terms) {
    ParamPolynomial p;
    for (int i = 0; i < terms; ++i) {
        TMono m;
        int deg = rng.uniform_int(0, max_deg);
        for (int d = 0; d < deg; ++d) m.e[static_cast<std::size_t>(rng.uniform_int(0, 3))] += 1;
        JMono jm{static_cast<unsigned>(rng.uniform_int(0, 2)),
                 static_cast<unsigned>(rng.uniform_int(0, 2))};
        Rational c(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
        p += ParamPolynomial::monomial(m, JPoly::monomial(jm, c));
    }
    return p;
}

} // namespace

TEST_CASE("arithmetic basics stay canonical") {
    auto t0 = ParamPolynomial::variable(0);
    auto t1 = ParamPolynomial::variable(1);
    auto j31 = ParamPolynomial::param_j31();

    auto p = t0 * t1 + j31 * t0 * t0;
    auto q = p - p;
    CHECK(q.is_zero());
    CHECK(q.to_string() == "(0)");

    auto r = (t0 + t1) * (t0 - t1);
    auto expect = t0 * t0 - t1 * t1;
    CHECK(r == expect);
}

TEST_CASE("canonical text form matches the documented shape") {
    auto t2 = ParamPolynomial::variable(2);
    auto t3 = ParamPolynomial::variable(3);
    auto p = ParamPolynomial::constant(Rational(4)) * ParamPolynomial::param_j32() * t2 * t3;
    CHECK(p.to_string() == "(4)*J32*t2*t3");

    auto c = ParamPolynomial::constant(Rational(-3, 2)) * t2 * t2;
    CHECK(c.to_string() == "(-3/2)*t2^2");
}

TEST_CASE("terms are emitted in graded-lex order") {
    auto t0 = ParamPolynomial::variable(0);
    auto t3 = ParamPolynomial::variable(3);
    auto p = t3 + t0 * t0; // degree 2 term first, then degree 1
    CHECK(p.to_string() == "(1)*t0^2 + (1)*t3");
}

TEST_CASE("serialization round-trips losslessly") {
    oracles::SplitMix rng(99);
    for (int i = 0; i < 50; ++i) {
        ParamPolynomial p = random_poly(rng, 4, 8);
        ParamPolynomial q = ParamPolynomial::parse(p.to_string());
        CHECK(p == q);
        CHECK(p.to_string() == q.to_string());
    }
}

TEST_CASE("parse rejects malformed input with position info") {
    CHECK_THROWS_AS(ParamPolynomial::parse("(1)*t5"), ParseError);
    CHECK_THROWS_AS(ParamPolynomial::parse("2*t1"), ParseError);
    try {
        ParamPolynomial::parse("(1)*J31*bogus");
    } catch (const ParseError& e) {
        CHECK(e.token == "bogus");
        CHECK(e.position == 8);
    }
}

TEST_CASE("derivative and homogeneity") {
    auto t0 = ParamPolynomial::variable(0);
    auto t1 = ParamPolynomial::variable(1);
    auto p = t0 * t0 * t1;
    CHECK(p.derivative(0) == ParamPolynomial::constant(Rational(2)) * t0 * t1);
    CHECK(p.derivative(1) == t0 * t0);
    CHECK(p.derivative(2).is_zero());
    CHECK(p.is_homogeneous(3));
    CHECK_FALSE((p + t0).is_homogeneous(3));
    CHECK(ParamPolynomial().is_homogeneous(2));
}

TEST_CASE("numeric evaluation agrees with direct arithmetic") {
    oracles::SplitMix rng(7);
    auto t0 = ParamPolynomial::variable(0);
    auto t2 = ParamPolynomial::variable(2);
    auto p = ParamPolynomial::constant(Rational(3)) * ParamPolynomial::param_j31() * t0 * t2 -
             ParamPolynomial::param_j32() * t2 * t2;
    for (int i = 0; i < 10; ++i) {
        std::array<cplx, 4> t = {rng.ccomplex(-1, 1), rng.ccomplex(-1, 1), rng.ccomplex(-1, 1),
                                 rng.ccomplex(-1, 1)};
        cplx j31 = rng.ccomplex(-2, 2), j32 = rng.ccomplex(-2, 2);
        cplx direct = 3.0 * j31 * t[0] * t[2] - j32 * t[2] * t[2];
        CHECK(std::abs(p.eval(t, j31, j32) - direct) < 1e-12);
    }
}
