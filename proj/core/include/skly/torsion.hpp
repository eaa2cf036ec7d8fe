// SPDX-License-Identifier: Apache-2.0
//
// Torsion sheaves up to isomorphism: finitely many curve points, each
// carrying a partition.  Hom dimensions and extension sets are computed
// pointwise; extension existence is Littlewood-Richardson positivity.
#ifndef SKLY_TORSION_HPP
#define SKLY_TORSION_HPP

#include <utility>
#include <vector>

#include "skly/elliptic.hpp"
#include "skly/partitions.hpp"

namespace skly {

class TorsionType {
  public:
    TorsionType() = default;
    // Validates that points are pairwise distinct and share one curve;
    // entries are kept sorted by coordinate for canonical output.
    explicit TorsionType(std::vector<std::pair<CurvePoint, Partition>> support);

    const std::vector<std::pair<CurvePoint, Partition>>& support() const { return support_; }
    bool empty() const { return support_.empty(); }

    int length() const;  // total number of boxes
    int l_max() const;   // max partition length over the support
    // Cycle class sum |lambda(x)| * x as a divisor.
    Divisor cycle() const;
    const CurvePtr& curve() const;

    // Local partitions in support order (the shape of the sheaf).
    std::vector<Partition> shape() const;

    friend bool operator==(const TorsionType&, const TorsionType&);

  private:
    std::vector<std::pair<CurvePoint, Partition>> support_;
};

// dim Hom(T1, T2) = sum over common points of sum_{i,j} min(lam_i, mu_j).
long long hom_dim_torsion(const TorsionType& t1, const TorsionType& t2);

// All isomorphism classes T fitting into 0 -> T2 -> T -> T1 -> 0:
// pointwise the LR-positive outer shapes, combined across points by
// direct product.  Output is canonically ordered.
std::vector<TorsionType> extension_set(const TorsionType& t1, const TorsionType& t2);

} // namespace skly

#endif
