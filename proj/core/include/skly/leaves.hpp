// SPDX-License-Identifier: Apache-2.0
//
// Symplectic-leaf taxonomy on P Hom(E, E(D)) for a stable bundle E on an
// elliptic curve: admissibility of cokernel types, the dimension formula,
// stratum enumeration, the full rank-2 classification, Casimir-fiber
// decomposition, leaf products, and the rank-2 simple-pole census.
#ifndef SKLY_LEAVES_HPP
#define SKLY_LEAVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "skly/polynomial.hpp"
#include "skly/torsion.hpp"

namespace skly {

// (degree, rank) of a stable summand of H^0 or H^1.
struct StableBundleDesc {
    int degree = 0;
    int rank = 1;
};

// Cokernel type up to isomorphism, at the level of shapes: local torsion
// partitions at pairwise-distinct (unspecified generic) points, plus the
// degree of the line summand in the non-injective rank-2 case.  An absent
// line_degree describes an injective-phi leaf.
struct CokernelShape {
    std::vector<Partition> torsion;
    std::optional<int> line_degree;

    static CokernelShape from_torsion(const TorsionType& t) { return {t.shape(), std::nullopt}; }
    int torsion_length() const;
    int l_max() const;
};

// A symplectic-leaf topological type: partition nu of r*k and a compatible
// collection of partitions with |lambdas[i]| = nu_i, l_max <= r, plus the
// dimension data.
struct LeafType {
    Partition nu;
    std::vector<Partition> lambdas;
    int leaf_dim = 0;
    int base_dim = 0;
    int stratum_dim = 0;
};

// dim Hom(A, B) for stable bundles on an elliptic curve: 1 for A = B,
// rk(A) deg(B) - deg(A) rk(B) when mu(A) < mu(B), otherwise 0.
long long hom_dim_stable(const StableBundleDesc& a, const StableBundleDesc& b);

// Occurs-as-cokernel test: l_max(T) <= r, length(T) = r deg(D), and
// cycle(T) linearly equivalent to r*D.
bool admissible(const TorsionType& t, int r, const Divisor& d, double tol = 1e-8);

// r^2 k - dim Hom(H0,H0) - dim Hom(H1,H1) - dim Hom(H0,H1) with the
// elliptic-curve Hom calculus; H1 is the line-plus-torsion cokernel and H0
// the (possibly absent) stable kernel.  Throws UnrealizablePair when the
// pair cannot occur.
int leaf_dimension(const std::optional<StableBundleDesc>& h0, const CokernelShape& h1, int r,
                   int k);

// Convenience overload for injective phi with an embedded torsion cokernel.
int leaf_dimension(const TorsionType& t, int r, int k);

// All leaf types for rank r and pole degree k: pairs (nu, Lambda_nu) with
// |nu| = rk and l_max <= r, collections at equal parts of nu counted as
// multisets.  Dimensions use generic distinct support points.  Throws
// InvalidInput when more than `budget` types would be produced.
std::vector<LeafType> enumerate_strata(int r, int k, std::size_t budget = SIZE_MAX);

// Complete rank-2 classification for E of degree 1 and divisor of degree n:
// injective constraint schemas (all strata of (2, n)) followed by the
// non-injective families (d(L), l(T)) with l_max(T) <= 1 and
// n + 1/2 < d(L) < 2n + 1/2 - l(T).
std::vector<CokernelShape> rank2_classify(int n);

// Torsion types with a fixed zero cycle: per point of multiplicity m, all
// partitions of m with length <= r, combined across points.
std::vector<TorsionType> leaves_over_casimir_fiber(const Divisor& zeros, int r);

// Extension set filtered by l_max <= r; every member meets the leaf
// product in a nonempty open set.
std::vector<TorsionType> product_decompose(const TorsionType& t1, const TorsionType& t2, int r);

// One member of the rank-2 simple-pole census.
struct CensusFamily {
    int index = 0;                     // 1..4
    std::string kind;                  // pencil-hypersurface | quadric | point | determinantal-curve
    std::string description;
    std::vector<std::string> members;  // per-member labels for families 2 and 3
    std::vector<std::string> equations;// canonical polynomial text where applicable
    std::vector<cplx> vanishing_points;// double zero of det phi per member
    std::string parameter;             // continuous parameter, if any
    std::string removed;               // excised locus
    CokernelShape coker;
    int leaf_dim = 0;
};

struct SklyaninCensus {
    cplx tau;
    cplx j21, j31, j32;
    // Pauli index a = 1,2,3 against the covering-torus 2-torsion
    // representative it is bound to (order 1/2, tau/2, (1+tau)/2).
    std::vector<std::pair<std::string, cplx>> index_convention;
    std::vector<CensusFamily> families;
};

// The four leaf families of the rank-2, degree-1, simple-pole setup with
// their defining equations over the given curve.
SklyaninCensus sklyanin_leaf_census(const LatticeCurve& curve);

} // namespace skly

#endif
