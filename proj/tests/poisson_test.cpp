// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skly/poisson.hpp"

using namespace skly;

namespace {

ParamPolynomial random_homogeneous(oracles::SplitMix& rng, int deg, int terms) {
    ParamPolynomial p;
    for (int i = 0; i < terms; ++i) {
        TMono m;
        for (int d = 0; d < deg; ++d) m.e[static_cast<std::size_t>(rng.uniform_int(0, 3))] += 1;
        int c = rng.uniform_int(-5, 5);
        if (c == 0) c = 1;
        p += ParamPolynomial::monomial(m, JPoly(Rational(c)));
    }
    return p;
}

} // namespace

TEST_CASE("determinant casimirs evaluate as stated") {
    auto [c1, c2] = sklyanin_casimirs();
    CHECK(c1.to_string() == "(1)*t0^2 + (1)*J31*t1^2 + (1)*J32*t2^2");
    CHECK(std::abs(c1.eval({1, 0, 0, 0}, cplx(2.7, 0.3), cplx(-1, 1)) - 1.0) < 1e-15);
    CHECK(std::abs(c2.eval({0, 1, 1, 1}, 0, 0) - 3.0) < 1e-15);
    CHECK(std::abs(c1.eval({0, 0, 0, 1}, cplx(5, 1), cplx(2, 2))) < 1e-15);
    CHECK(std::abs(c2.eval({0, 0, 0, 1}, 0, 0) - 1.0) < 1e-15);
}

TEST_CASE("jacobian bracket against the permutation-sum oracle") {
    auto [c1, c2] = sklyanin_casimirs();
    auto t0 = ParamPolynomial::variable(0);
    auto t1 = ParamPolynomial::variable(1);

    ParamPolynomial b01 = jacobian_bracket(c1, c2, t0, t1);
    CHECK(b01.to_string() == "(4)*J32*t2*t3");
    CHECK(b01 == ParamPolynomial::parse("(4)*J32*t2*t3"));

    // independent Leibniz-expansion determinant
    std::array<std::array<ParamPolynomial, 4>, 4> jac;
    const ParamPolynomial* rows[4] = {&c1, &c2, &t0, &t1};
    for (std::size_t r = 0; r < 4; ++r)
        for (int a = 0; a < 4; ++a) jac[r][static_cast<std::size_t>(a)] = rows[r]->derivative(a);
    CHECK(b01 == oracles::leibniz_det4(jac));

    // repeated row kills the determinant
    CHECK(jacobian_bracket(c1, c2, c1, t1).is_zero());
    CHECK(jacobian_bracket(c1, c2, t1, c2).is_zero());
    // antisymmetry
    CHECK((jacobian_bracket(c1, c2, t0, t1) + jacobian_bracket(c1, c2, t1, t0)).is_zero());
}

TEST_CASE("jacobian bracket randomized against the oracle") {
    oracles::SplitMix rng(17);
    for (int i = 0; i < 10; ++i) {
        ParamPolynomial c1 = random_homogeneous(rng, 2, 3);
        ParamPolynomial c2 = random_homogeneous(rng, 2, 3);
        ParamPolynomial f = random_homogeneous(rng, rng.uniform_int(1, 3), 3);
        ParamPolynomial g = random_homogeneous(rng, rng.uniform_int(1, 3), 3);
        std::array<std::array<ParamPolynomial, 4>, 4> jac;
        const ParamPolynomial* rows[4] = {&c1, &c2, &f, &g};
        for (std::size_t r = 0; r < 4; ++r)
            for (int a = 0; a < 4; ++a) jac[r][static_cast<std::size_t>(a)] = rows[r]->derivative(a);
        CHECK(jacobian_bracket(c1, c2, f, g) == oracles::leibniz_det4(jac));
    }
}

TEST_CASE("bracket is bilinear and a derivation in each argument") {
    oracles::SplitMix rng(29);
    auto [c1, c2] = sklyanin_casimirs();
    for (int i = 0; i < 5; ++i) {
        ParamPolynomial f = random_homogeneous(rng, 3, 3);
        ParamPolynomial g = random_homogeneous(rng, 3, 3);
        ParamPolynomial h = random_homogeneous(rng, 3, 3);
        // bilinearity
        CHECK(jacobian_bracket(c1, c2, f + g, h) ==
              jacobian_bracket(c1, c2, f, h) + jacobian_bracket(c1, c2, g, h));
        // Leibniz in the second argument
        CHECK(jacobian_bracket(c1, c2, f, g * h) ==
              jacobian_bracket(c1, c2, f, g) * h + g * jacobian_bracket(c1, c2, f, h));
        // Leibniz in the first argument
        CHECK(jacobian_bracket(c1, c2, f * g, h) ==
              jacobian_bracket(c1, c2, f, h) * g + f * jacobian_bracket(c1, c2, g, h));
    }
}

TEST_CASE("sklyanin bivector: exact jacobi identity and casimir property") {
    auto [c1, c2] = sklyanin_casimirs();
    QuadraticBivector b = QuadraticBivector::from_casimirs(c1, c2);

    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) {
            CHECK((b.entry(a, c) + b.entry(c, a)).is_zero());
            if (a == c) CHECK(b.entry(a, c).is_zero());
            CHECK(b.entry(a, c).is_homogeneous(2));
        }

    auto residuals = schouten_jacobi_residual(b);
    for (const auto& r : residuals) CHECK(r.is_zero());

    for (const auto& r : casimir_residual(b, c1)) CHECK(r.is_zero());
    for (const auto& r : casimir_residual(b, c2)) CHECK(r.is_zero());

    // t0 is not a Casimir: {t0, t1} = 4 J32 t2 t3
    auto res0 = casimir_residual(b, ParamPolynomial::variable(0));
    CHECK(res0[1] == ParamPolynomial::parse("(4)*J32*t2*t3"));
    bool all_zero = true;
    for (const auto& r : res0) all_zero = all_zero && r.is_zero();
    CHECK_FALSE(all_zero);
}

TEST_CASE("zero bivector has zero residuals") {
    QuadraticBivector z = QuadraticBivector::from_upper({});
    for (const auto& r : schouten_jacobi_residual(z)) CHECK(r.is_zero());
}

TEST_CASE("a hand-built non-poisson bivector is caught") {
    // {t0,t1} = t2^2, {t0,t2} = t0 t1, rest zero; the (0,1,2) jacobiator
    // expands by hand to t1 t2^2
    auto t0 = ParamPolynomial::variable(0);
    auto t1 = ParamPolynomial::variable(1);
    auto t2 = ParamPolynomial::variable(2);
    std::array<ParamPolynomial, 6> upper; // order: 01, 02, 03, 12, 13, 23
    upper[0] = t2 * t2;
    upper[1] = t0 * t1;
    QuadraticBivector b = QuadraticBivector::from_upper(upper);
    auto res = schouten_jacobi_residual(b);
    CHECK(res[0] == t1 * t2 * t2);
    bool some_nonzero = false;
    for (const auto& r : res) some_nonzero = some_nonzero || !r.is_zero();
    CHECK(some_nonzero);
}

TEST_CASE("jacobian bivectors of random quadratic casimir pairs are poisson") {
    oracles::SplitMix rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        ParamPolynomial c1 = random_homogeneous(rng, 2, rng.uniform_int(2, 4));
        ParamPolynomial c2 = random_homogeneous(rng, 2, rng.uniform_int(2, 4));
        QuadraticBivector b = QuadraticBivector::from_casimirs(c1, c2);
        for (const auto& r : schouten_jacobi_residual(b)) CHECK(r.is_zero());
        for (const auto& r : casimir_residual(b, c1)) CHECK(r.is_zero());
        for (const auto& r : casimir_residual(b, c2)) CHECK(r.is_zero());
    }
}

TEST_CASE("bracket of coordinates reproduces the bivector entries") {
    auto [c1, c2] = sklyanin_casimirs();
    QuadraticBivector b = QuadraticBivector::from_casimirs(c1, c2);
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c)
            CHECK(b.bracket(ParamPolynomial::variable(a), ParamPolynomial::variable(c)) ==
                  b.entry(a, c));
}
