// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skly/torsion.hpp"

using namespace skly;

namespace {
const CurvePtr curve = LatticeCurve::make(cplx(0, 1.2));

CurvePoint pt(double x, double y) { return CurvePoint(cplx(x, 0) + cplx(y, 0) * curve->tau(), curve); }

TorsionType make(std::initializer_list<std::pair<CurvePoint, Partition>> e) {
    return TorsionType(std::vector<std::pair<CurvePoint, Partition>>(e));
}
} // namespace

TEST_CASE("torsion type invariants") {
    auto p = pt(0.11, 0.23);
    auto q = pt(0.31, 0.07);
    TorsionType t = make({{p, Partition({2, 1})}, {q, Partition({1})}});
    CHECK(t.length() == 4);
    CHECK(t.l_max() == 2);
    CHECK(t.cycle().degree() == 4);
    CHECK(t.shape().size() == 2);

    CHECK_THROWS_AS(make({{p, Partition({1})}, {p, Partition({2})}}), InvalidInput);

    // empty partitions are dropped
    TorsionType z = make({{p, Partition{}}});
    CHECK(z.empty());
    CHECK(z.length() == 0);
    CHECK(z.l_max() == 0);
}

TEST_CASE("hom dimensions of torsion pairs") {
    auto p = pt(0.11, 0.23);
    auto q = pt(0.31, 0.07);
    TorsionType op = make({{p, Partition({1})}});
    CHECK(hom_dim_torsion(op, op) == 1);

    TorsionType oq = make({{q, Partition({1})}});
    CHECK(hom_dim_torsion(op, oq) == 0); // disjoint supports

    TorsionType t21 = make({{p, Partition({2, 1})}});
    CHECK(hom_dim_torsion(t21, t21) == 5);

    // symmetry and additivity over points
    TorsionType mixed = make({{p, Partition({2})}, {q, Partition({1, 1})}});
    CHECK(hom_dim_torsion(mixed, t21) == hom_dim_torsion(t21, mixed));
    CHECK(hom_dim_torsion(mixed, mixed) == hom_dim_local(Partition({2}), Partition({2})) +
                                               hom_dim_local(Partition({1, 1}), Partition({1, 1})));

    auto other = LatticeCurve::make(cplx(0, 1.5));
    TorsionType foreign(
        {std::pair<CurvePoint, Partition>{CurvePoint(cplx(0.2, 0.2), other), Partition({1})}});
    CHECK_THROWS_AS(hom_dim_torsion(op, foreign), CurveMismatch);
}

TEST_CASE("square skyscrapers: self-homs are the sum of m^2 over points") {
    oracles::SplitMix rng(71);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::pair<CurvePoint, Partition>> support;
        long long expect = 0;
        double x = 0.04;
        int npts = rng.uniform_int(1, 3);
        for (int i = 0; i < npts; ++i) {
            int m = rng.uniform_int(1, 4);
            support.emplace_back(pt(x, 0.44 - x), Partition(std::vector<int>(static_cast<std::size_t>(m), 1)));
            expect += static_cast<long long>(m) * m;
            x += 0.13;
        }
        TorsionType t(support);
        CHECK(hom_dim_torsion(t, t) == expect);
    }
}

TEST_CASE("extension sets at one point") {
    auto p = pt(0.11, 0.23);
    TorsionType op = make({{p, Partition({1})}});
    auto exts = extension_set(op, op);
    REQUIRE(exts.size() == 2);
    CHECK(exts[0] == make({{p, Partition({2})}}));
    CHECK(exts[1] == make({{p, Partition({1, 1})}}));
}

TEST_CASE("extension sets with disjoint support collapse to the direct sum") {
    auto p = pt(0.11, 0.23);
    auto q = pt(0.31, 0.07);
    TorsionType t1 = make({{p, Partition({2})}});
    TorsionType t2 = make({{q, Partition({1, 1})}});
    auto exts = extension_set(t1, t2);
    REQUIRE(exts.size() == 1);
    CHECK(exts[0] == make({{p, Partition({2})}, {q, Partition({1, 1})}}));

    // zero kernel: only the split sequence
    auto single = extension_set(t1, TorsionType{});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == t1);
    auto single2 = extension_set(TorsionType{}, t2);
    REQUIRE(single2.size() == 1);
    CHECK(single2[0] == t2);
}

TEST_CASE("extension set counts, lengths and cycle classes") {
    oracles::SplitMix rng(67);
    for (int trial = 0; trial < 8; ++trial) {
        // coordinates inside the fundamental cell of C = C/(1/2)Lambda
        auto p = pt(rng.uniform(0.02, 0.22), rng.uniform(0.02, 0.22));
        auto q = pt(rng.uniform(0.26, 0.46), rng.uniform(0.26, 0.46));
        auto pick = [&](int n) {
            auto parts = all_partitions(n);
            return parts[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(parts.size()) - 1))];
        };
        Partition nu_p = pick(rng.uniform_int(1, 3)); // t1 at p
        Partition nu_q = pick(rng.uniform_int(1, 2)); // t1 at q
        Partition mu_p = pick(rng.uniform_int(1, 2)); // t2 at p
        TorsionType t1 = make({{p, nu_p}, {q, nu_q}});
        TorsionType t2 = make({{p, mu_p}});
        auto exts = extension_set(t1, t2);

        // size = product over points of LR-positive counts (q contributes 1)
        std::size_t expect = lr_positive_outer(mu_p, nu_p).size();
        CHECK(exts.size() == expect);
        for (const auto& t : exts) {
            CHECK(t.length() == t1.length() + t2.length());
            CHECK(t.l_max() >= std::max(nu_q.length(), 1));
            CHECK(abel_jacobi_equivalent(
                t.cycle(), Divisor({{p, nu_p.size() + mu_p.size()}, {q, nu_q.size()}})));
        }
    }
}
