// SPDX-License-Identifier: Apache-2.0
//
// Charge-level calculus of derived autoequivalences on an elliptic curve:
// (degree, rank) vectors acted on by the standard transform (90 degree
// rotation), line-bundle twists and shifts, SL2(Z) pair invariants,
// negative-regular continued fractions, and the correspondence solver that
// rewrites P Hom(E, E(D)) as an extension moduli space.
#ifndef SKLY_FM_HPP
#define SKLY_FM_HPP

#include <optional>
#include <string>
#include <vector>

#include "skly/errors.hpp"

namespace skly {

struct ChargeVector {
    long long deg = 0;
    long long rank = 0;
    friend bool operator==(const ChargeVector&, const ChargeVector&) = default;
};

struct Move {
    enum class Kind { FM, Twist, Shift };
    Kind kind = Kind::FM;
    long long n = 0; // twist degree, used by Kind::Twist only

    static Move fm() { return {Kind::FM, 0}; }
    static Move twist(long long n) { return {Kind::Twist, n}; }
    static Move shift() { return {Kind::Shift, 0}; }
    friend bool operator==(const Move&, const Move&) = default;
};

// Moves applied left to right.
using EquivalenceWord = std::vector<Move>;

// FM: (d, r) -> (-r, d);  Twist(n): (d, r) -> (d + n r, r);  Shift: v -> -v.
ChargeVector apply_move(const Move& m, ChargeVector v);
ChargeVector apply_word(const EquivalenceWord& w, ChargeVector v);

// Total integer matrix of the word acting on column (d, r); always
// determinant 1.
struct Mat2i {
    long long a = 1, b = 0, c = 0, d = 1; // [[a,b],[c,d]]
    long long det() const { return a * d - b * c; }
};
Mat2i word_matrix(const EquivalenceWord& w);

// "T(-1);F;T(2);S" round-trip serialization.
std::string word_to_string(const EquivalenceWord& w);
EquivalenceWord word_from_string(const std::string& text);

// |det(v1, v2)| together with the unique alpha in (Z/|det|)^* satisfying
// v1 = alpha * v2 componentwise mod |det|.  Throws NoSolution when v2 is
// not primitive mod |det| or no residue works.
struct PairInvariants {
    long long det = 0;   // absolute value
    long long alpha = 0; // residue in [0, det)
    friend bool operator==(const PairInvariants&, const PairInvariants&) = default;
};
PairInvariants pair_invariants(const ChargeVector& v1, const ChargeVector& v2);

// d/r = 1 / (r1 - 1/(r2 - ... 1/rp)) with all r_i >= 2; requires
// 0 < d < r and gcd(d, r) = 1.
std::vector<long long> continued_fraction(long long d, long long r);

struct FoCorrespondence {
    EquivalenceWord word;   // sends charge of E(D) to (0, -1)
    ChargeVector xi;        // image of the charge of E
    ChargeVector e_charge;  // (d, r)
    ChargeVector ed_charge; // (d + k r, r)
    long long n = 0;        // smallest positive n with m r + n d = 1
};

// Builds the explicit word Twist(-k), then F and Twist(r_i) per
// continued-fraction step, then Shift; verifies the E(D) charge lands on
// (0, -1) and returns the xi charge.
FoCorrespondence solve_fo_correspondence(long long r, long long d, long long k);

// A word carrying the pair (v1, v2) to (w1, w2) under the simultaneous
// action, when the pairs lie in the same orbit (equal signed determinant
// and alpha); std::nullopt otherwise.  Used by the orbit-completeness
// checks.
std::optional<EquivalenceWord> find_connecting_word(ChargeVector v1, ChargeVector v2,
                                                    ChargeVector w1, ChargeVector w2);

} // namespace skly

#endif
