// SPDX-License-Identifier: Apache-2.0
//
// Integer partitions, length sequences, and Littlewood-Richardson
// coefficients by lattice-word tableau enumeration.
#ifndef SKLY_PARTITIONS_HPP
#define SKLY_PARTITIONS_HPP

#include <string>
#include <vector>

#include "skly/errors.hpp"

namespace skly {

// Weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    // Sorts the parts; rejects nonpositive entries.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    Partition conjugate() const;
    // Multiplicity of part p.
    int multiplicity(int p) const;

    // "(3,1,1)"; "()" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts, used only for canonical ordering of output.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  private:
    std::vector<int> parts_;
};

// All partitions of n, descending lexicographic ((n) first).
std::vector<Partition> all_partitions(int n);
// All partitions of n of length at most maxlen.
std::vector<Partition> partitions_max_length(int n, int maxlen);

// (a_1..a_jmax) with a_j = length of (module of type lam) tensor O/m^j,
// i.e. a_j = sum_{p<=j} p*m_p + j * sum_{p>j} m_p.
std::vector<int> partition_to_lengths(const Partition& lam, int jmax);

// Inverse of partition_to_lengths.  Requires the differences a_{j+1} - a_j
// to be weakly decreasing and to reach 0 (the sequence has stabilized);
// throws InvalidLengthSequence otherwise.
Partition lengths_to_partition(const std::vector<int>& a);

// dim Hom for two modules of types lam and mu at one point:
// sum_{i,j} min(lam_i, mu_j).
long long hom_dim_local(const Partition& lam, const Partition& mu);

// Littlewood-Richardson coefficient c^lam_{mu,nu} counted by
// lattice-word skew tableaux.
long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// All lam of size |mu|+|nu| with c^lam_{mu,nu} > 0.
std::vector<Partition> lr_positive_outer(const Partition& mu, const Partition& nu);

} // namespace skly

#endif
