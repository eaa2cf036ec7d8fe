// SPDX-License-Identifier: Apache-2.0
#include "skly/leaves.hpp"

#include <algorithm>
#include <functional>

#include "skly/poisson.hpp"

namespace skly {

int CokernelShape::torsion_length() const {
    int n = 0;
    for (const auto& lam : torsion) n += lam.size();
    return n;
}

int CokernelShape::l_max() const {
    int m = 0;
    for (const auto& lam : torsion) m = std::max(m, lam.length());
    return m;
}

long long hom_dim_stable(const StableBundleDesc& a, const StableBundleDesc& b) {
    if (a.rank <= 0 || b.rank <= 0) throw InvalidInput("bundle rank must be positive");
    if (a.degree == b.degree && a.rank == b.rank) return 1;
    long long chi = static_cast<long long>(a.rank) * b.degree -
                    static_cast<long long>(a.degree) * b.rank;
    return chi > 0 ? chi : 0;
}

bool admissible(const TorsionType& t, int r, const Divisor& d, double tol) {
    if (r < 1) throw InvalidInput("rank must be at least 1");
    if (d.degree() < 1) throw InvalidInput("divisor degree must be at least 1");
    if (!t.empty() && d.curve() && !t.curve()->same_curve(*d.curve()))
        throw CurveMismatch("torsion sheaf and divisor live on different curves");
    if (t.l_max() > r) return false;
    if (t.length() != r * d.degree()) return false;
    return abel_jacobi_equivalent(t.cycle(), d.scaled(r), tol);
}

int leaf_dimension(const std::optional<StableBundleDesc>& h0, const CokernelShape& h1, int r,
                   int k) {
    if (r < 1 || k < 1) throw InvalidInput("rank and pole degree must be positive");
    const int lt = h1.torsion_length();

    if (!h0.has_value()) {
        if (h1.line_degree.has_value())
            throw UnrealizablePair("injective phi has a torsion cokernel, no line summand");
        if (h1.l_max() > r)
            throw UnrealizablePair("cokernel needs local length at most the rank");
        if (lt != r * k)
            throw UnrealizablePair("cokernel length must equal rank times pole degree");
    } else {
        // Non-injective classification is the rank-2, degree-1 one.
        if (r != 2)
            throw UnrealizablePair("non-injective cokernels are classified for rank 2 only");
        if (!h1.line_degree.has_value())
            throw UnrealizablePair("a kernel forces a line summand in the cokernel");
        if (h0->rank != 1)
            throw UnrealizablePair("rank-2 kernel must be a line bundle");
        const int dl = *h1.line_degree;
        if (h1.l_max() > 1)
            throw UnrealizablePair("torsion part must have simple support");
        // 2k + 1/2 - l(T) > d(L) > k + 1/2 in integers
        if (!(dl >= k + 1 && dl <= 2 * k - lt))
            throw UnrealizablePair("line degree violates the rank-2 inequalities");
        if (h0->degree != dl + lt - 2 * k)
            throw UnrealizablePair("kernel degree is fixed by the determinant");
    }

    // Hom(H0, H0)
    long long h00 = h0.has_value() ? 1 : 0;
    // Hom(H1, H1): line self-homs, line -> torsion, torsion -> line (zero),
    // torsion self-homs
    long long h11 = 0;
    if (h1.line_degree.has_value()) h11 += 1 + lt;
    for (const auto& lam : h1.torsion) h11 += hom_dim_local(lam, lam);
    // Hom(H0, H1)
    long long h01 = 0;
    if (h0.has_value()) {
        if (h1.line_degree.has_value())
            h01 += hom_dim_stable(*h0, StableBundleDesc{*h1.line_degree, 1});
        h01 += static_cast<long long>(h0->rank) * lt;
    }
    return static_cast<int>(static_cast<long long>(r) * r * k - h00 - h11 - h01);
}

int leaf_dimension(const TorsionType& t, int r, int k) {
    return leaf_dimension(std::nullopt, CokernelShape::from_torsion(t), r, k);
}

// ---------------------------------------------------------------------------
// Stratum enumeration

namespace {

// Multisets of `count` partitions drawn from `pool` (pool is ordered; the
// chosen indices are weakly increasing, so each multiset appears once).
void multisets(const std::vector<Partition>& pool, int count, std::size_t from,
               std::vector<Partition>& cur,
               const std::function<void(const std::vector<Partition>&)>& emit) {
    if (count == 0) {
        emit(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        multisets(pool, count - 1, i, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<LeafType> enumerate_strata(int r, int k, std::size_t budget) {
    if (r < 1 || k < 1) throw InvalidInput("rank and pole degree must be positive");
    std::vector<LeafType> out;

    std::vector<Partition> nus = all_partitions(r * k);
    // generic stratum (all parts 1) first, then by descending length
    std::stable_sort(nus.begin(), nus.end(), [](const Partition& a, const Partition& b) {
        return a.length() > b.length();
    });

    for (const Partition& nu : nus) {
        // group equal parts of nu
        std::vector<std::pair<int, int>> groups; // (part, multiplicity)
        for (int i = 0; i < nu.length(); ++i) {
            if (!groups.empty() && groups.back().first == nu.part(i))
                groups.back().second += 1;
            else
                groups.emplace_back(nu.part(i), 1);
        }
        std::vector<std::vector<std::vector<Partition>>> per_group; // choices per group
        bool feasible = true;
        for (const auto& [part, mult] : groups) {
            std::vector<Partition> pool = partitions_max_length(part, r);
            if (pool.empty()) {
                feasible = false;
                break;
            }
            std::vector<std::vector<Partition>> sets;
            std::vector<Partition> cur;
            multisets(pool, mult, 0, cur,
                      [&sets](const std::vector<Partition>& m) { sets.push_back(m); });
            per_group.push_back(std::move(sets));
        }
        if (!feasible) continue;

        std::vector<std::size_t> pick(per_group.size(), 0);
        for (;;) {
            LeafType lt;
            lt.nu = nu;
            for (std::size_t g = 0; g < per_group.size(); ++g)
                for (const Partition& lam : per_group[g][pick[g]]) lt.lambdas.push_back(lam);
            lt.leaf_dim = leaf_dimension(std::nullopt, CokernelShape{lt.lambdas, std::nullopt}, r, k);
            lt.base_dim = nu.length() - 1;
            lt.stratum_dim = lt.leaf_dim + lt.base_dim;
            out.push_back(std::move(lt));
            if (out.size() > budget) throw InvalidInput("stratum enumeration budget exceeded");
            std::size_t g = 0;
            for (; g < pick.size(); ++g) {
                if (++pick[g] < per_group[g].size()) break;
                pick[g] = 0;
            }
            if (g == pick.size()) break;
        }
    }
    return out;
}

std::vector<CokernelShape> rank2_classify(int n) {
    if (n < 1) throw InvalidInput("pole degree must be at least 1");
    std::vector<CokernelShape> out;
    for (const LeafType& lt : enumerate_strata(2, n))
        out.push_back(CokernelShape{lt.lambdas, std::nullopt});
    for (int dl = n + 1; dl <= 2 * n; ++dl)
        for (int l = 0; dl <= 2 * n - l; ++l) {
            std::vector<Partition> simple(static_cast<std::size_t>(l), Partition({1}));
            out.push_back(CokernelShape{std::move(simple), dl});
        }
    return out;
}

std::vector<TorsionType> leaves_over_casimir_fiber(const Divisor& zeros, int r) {
    if (r < 1) throw InvalidInput("rank must be at least 1");
    std::vector<std::vector<Partition>> choices;
    for (const auto& [p, m] : zeros.entries()) {
        if (m < 1) throw InvalidInput("zero divisor must be effective");
        choices.push_back(partitions_max_length(m, r));
        if (choices.back().empty()) return {};
    }
    std::vector<TorsionType> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        std::vector<std::pair<CurvePoint, Partition>> support;
        for (std::size_t i = 0; i < choices.size(); ++i)
            support.emplace_back(zeros.entries()[i].first, choices[i][pick[i]]);
        out.emplace_back(std::move(support));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const TorsionType& a, const TorsionType& b) {
        return b.shape() < a.shape();
    });
    return out;
}

std::vector<TorsionType> product_decompose(const TorsionType& t1, const TorsionType& t2, int r) {
    if (r < 1) throw InvalidInput("rank must be at least 1");
    std::vector<TorsionType> all = extension_set(t1, t2);
    all.erase(std::remove_if(all.begin(), all.end(),
                             [r](const TorsionType& t) { return t.l_max() > r; }),
              all.end());
    return all;
}

// ---------------------------------------------------------------------------
// Rank-2 simple-pole census

SklyaninCensus sklyanin_leaf_census(const LatticeCurve& curve) {
    if (curve.subdivision() != 2)
        throw InvalidInput("census requires the subdivision-2 curve");
    SklyaninCensus census;
    census.tau = curve.tau();
    auto [j21, j31, j32] = j_constants(curve);
    census.j21 = j21;
    census.j31 = j31;
    census.j32 = j32;
    const cplx tau = curve.tau();
    census.index_convention = {
        {"a=1", cplx(0.5, 0)},
        {"a=2", tau / 2.0},
        {"a=3", (cplx(1, 0) + tau) / 2.0},
    };

    auto [c1, c2] = sklyanin_casimirs();
    const ParamPolynomial J31 = ParamPolynomial::param_j31();
    const ParamPolynomial J32 = ParamPolynomial::param_j32();
    const ParamPolynomial J21 = J31 - J32;
    auto sq = [](int a) {
        auto t = ParamPolynomial::variable(a);
        return t * t;
    };
    // Defining quadric per 2-torsion index, in the determinant-Casimir
    // convention for the constants (J21 expanded as J31 - J32).
    const std::array<ParamPolynomial, 4> quadric = {
        c2,                                  // a = e
        sq(0) - J21 * sq(2) - J31 * sq(3),   // a = 1
        sq(0) + J21 * sq(1) - J32 * sq(3),   // a = 2
        c1,                                  // a = 3
    };
    // Double zero of det phi on each quadric.
    const std::array<cplx, 4> vanish = {cplx(0, 0), tau / 4.0, (cplx(1, 0) + tau) / 4.0,
                                        cplx(0.25, 0)};
    static const char* alabel[4] = {"a=e", "a=1", "a=2", "a=3"};

    CensusFamily f1;
    f1.index = 1;
    f1.kind = "pencil-hypersurface";
    f1.description = "cokernel O_p + O_q with p != q, p + q ~ 2e";
    f1.equations = {c1.to_string() + "  +  mu * [" + c2.to_string() + "]"};
    f1.parameter = "mu in P^1 minus {0, -J31, -J32, inf}";
    f1.removed = "Z";
    f1.coker = CokernelShape{{Partition({1}), Partition({1})}, std::nullopt};
    f1.leaf_dim = leaf_dimension(std::nullopt, f1.coker, 2, 1);
    census.families.push_back(std::move(f1));

    CensusFamily f2;
    f2.index = 2;
    f2.kind = "quadric";
    f2.description = "cokernel O_{2a} at a 2-torsion point a";
    for (int a = 0; a < 4; ++a) {
        f2.members.emplace_back(alabel[a]);
        f2.equations.push_back(quadric[static_cast<std::size_t>(a)].to_string());
        f2.vanishing_points.push_back(vanish[static_cast<std::size_t>(a)]);
    }
    f2.removed = "Z and the point P_a";
    f2.coker = CokernelShape{{Partition({2})}, std::nullopt};
    f2.leaf_dim = leaf_dimension(std::nullopt, f2.coker, 2, 1);
    census.families.push_back(std::move(f2));

    CensusFamily f3;
    f3.index = 3;
    f3.kind = "point";
    f3.description = "cokernel O_a + O_a; the coordinate point P_a";
    for (int a = 0; a < 4; ++a) {
        f3.members.emplace_back(alabel[a]);
        f3.vanishing_points.push_back(vanish[static_cast<std::size_t>(a)]);
    }
    f3.coker = CokernelShape{{Partition({1, 1})}, std::nullopt};
    f3.leaf_dim = leaf_dimension(std::nullopt, f3.coker, 2, 1);
    census.families.push_back(std::move(f3));

    CensusFamily f4;
    f4.index = 4;
    f4.kind = "determinantal-curve";
    f4.description = "non-injective phi; one point of Z per degree-0 line bundle";
    f4.parameter = "K in Pic^0(C)";
    f4.coker = CokernelShape{{}, 2};
    f4.leaf_dim = leaf_dimension(StableBundleDesc{0, 1}, f4.coker, 2, 1);
    census.families.push_back(std::move(f4));

    return census;
}

} // namespace skly
