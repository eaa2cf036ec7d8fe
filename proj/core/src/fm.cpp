// SPDX-License-Identifier: Apache-2.0
#include "skly/fm.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace skly {

ChargeVector apply_move(const Move& m, ChargeVector v) {
    switch (m.kind) {
        case Move::Kind::FM:
            return {-v.rank, v.deg};
        case Move::Kind::Twist:
            return {v.deg + m.n * v.rank, v.rank};
        case Move::Kind::Shift:
            return {-v.deg, -v.rank};
    }
    throw Error("unreachable");
}

ChargeVector apply_word(const EquivalenceWord& w, ChargeVector v) {
    for (const Move& m : w) v = apply_move(m, v);
    return v;
}

Mat2i word_matrix(const EquivalenceWord& w) {
    Mat2i total;
    for (const Move& m : w) {
        Mat2i s;
        switch (m.kind) {
            case Move::Kind::FM: s = {0, -1, 1, 0}; break;
            case Move::Kind::Twist: s = {1, m.n, 0, 1}; break;
            case Move::Kind::Shift: s = {-1, 0, 0, -1}; break;
        }
        // moves act left to right, so each new matrix multiplies from the left
        total = Mat2i{s.a * total.a + s.b * total.c, s.a * total.b + s.b * total.d,
                      s.c * total.a + s.d * total.c, s.c * total.b + s.d * total.d};
    }
    return total;
}

std::string word_to_string(const EquivalenceWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ";";
        switch (w[i].kind) {
            case Move::Kind::FM: os << "F"; break;
            case Move::Kind::Twist: os << "T(" << w[i].n << ")"; break;
            case Move::Kind::Shift: os << "S"; break;
        }
    }
    return os.str();
}

EquivalenceWord word_from_string(const std::string& text) {
    EquivalenceWord w;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    for (;;) {
        skip_ws();
        if (pos >= text.size()) break;
        char c = text[pos];
        if (c == 'F') {
            w.push_back(Move::fm());
            ++pos;
        } else if (c == 'S') {
            w.push_back(Move::shift());
            ++pos;
        } else if (c == 'T') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != '(')
                throw ParseError("expected '(' after T at position " + std::to_string(pos), pos, "T");
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != ')') ++pos;
            if (pos >= text.size())
                throw ParseError("unterminated twist at position " + std::to_string(start), start,
                                 text.substr(start));
            std::string num = text.substr(start, pos - start);
            ++pos;
            try {
                w.push_back(Move::twist(std::stoll(num)));
            } catch (const std::exception&) {
                throw ParseError("malformed twist degree at position " + std::to_string(start),
                                 start, num);
            }
        } else {
            throw ParseError("unknown move at position " + std::to_string(pos), pos,
                             std::string(1, c));
        }
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ';')
                throw ParseError("expected ';' at position " + std::to_string(pos), pos,
                                 std::string(1, text[pos]));
            ++pos;
        }
    }
    return w;
}

// ---------------------------------------------------------------------------
// Pair invariants

namespace {

long long mod_pos(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long mul_mod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

// x with x*a + y*b = gcd(a, b)
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

PairInvariants pair_invariants(const ChargeVector& v1, const ChargeVector& v2) {
    long long det = v1.deg * v2.rank - v2.deg * v1.rank;
    if (det == 0) throw InvalidInput("charge vectors must have nonzero determinant");
    long long m = det < 0 ? -det : det;
    if (m == 1) return {1, 0};

    long long d2 = mod_pos(v2.deg, m), r2 = mod_pos(v2.rank, m);
    long long d1 = mod_pos(v1.deg, m), r1 = mod_pos(v1.rank, m);
    if (std::gcd(std::gcd(d2, r2), m) != 1)
        throw NoSolution("second charge vector is not primitive modulo the determinant");

    // u*d2 + v*r2 = 1 (mod m): Bezout for gcd(d2, r2), then invert it mod m
    long long a, b;
    long long g12 = ext_gcd(d2, r2, a, b);
    long long s, t;
    ext_gcd(g12, m, s, t); // s*g12 = gcd(d2,r2,m) = 1 (mod m) by the check above
    long long u = mul_mod(mod_pos(s, m), mod_pos(a, m), m);
    long long v = mul_mod(mod_pos(s, m), mod_pos(b, m), m);

    long long alpha = mod_pos(mul_mod(u, d1, m) + mul_mod(v, r1, m), m);
    if (mul_mod(alpha, d2, m) != d1 || mul_mod(alpha, r2, m) != r1)
        throw NoSolution("no residue satisfies the congruence");
    if (std::gcd(alpha, m) != 1)
        throw NoSolution("the residue class is not invertible");
    return {m, alpha};
}

// ---------------------------------------------------------------------------
// Continued fractions

std::vector<long long> continued_fraction(long long d, long long r) {
    if (!(0 < d && d < r) || std::gcd(d, r) != 1)
        throw InvalidFraction("need 0 < d < r with gcd(d, r) = 1");
    std::vector<long long> out;
    while (d != 0) {
        long long ri = (r + d - 1) / d; // ceil(r/d)
        out.push_back(ri);
        long long dn = ri * d - r;
        r = d;
        d = dn;
    }
    return out;
}

FoCorrespondence solve_fo_correspondence(long long r, long long d, long long k) {
    if (!(0 < d && d < r) || std::gcd(r, d) != 1 || k < 1)
        throw InvalidInput("need 0 < d < r coprime and k >= 1");
    // smallest positive n with m r + n d = 1, i.e. n = d^{-1} mod r
    long long x, y;
    ext_gcd(d, r, x, y);
    long long n = mod_pos(x, r);
    if (n == 0) n = r;

    FoCorrespondence fo;
    fo.n = n;
    fo.e_charge = {d, r};
    fo.ed_charge = {d + k * r, r};
    fo.word.push_back(Move::twist(-k));
    for (long long ri : continued_fraction(d, r)) {
        fo.word.push_back(Move::fm());
        fo.word.push_back(Move::twist(ri));
    }
    fo.word.push_back(Move::shift());

    ChargeVector target = apply_word(fo.word, fo.ed_charge);
    if (!(target == ChargeVector{0, -1}))
        throw Error("internal: correspondence word does not send E(D) to O_C[1]");
    fo.xi = apply_word(fo.word, fo.e_charge);
    return fo;
}

// ---------------------------------------------------------------------------
// Orbit words

namespace {

struct Reduction {
    EquivalenceWord word;
    ChargeVector v1, v2;

    void push(Move m) {
        word.push_back(m);
        v1 = apply_move(m, v1);
        v2 = apply_move(m, v2);
    }
};

// Deterministic reduction: Euclid v2 down to (g, 0) with g > 0, then use
// the residual twist freedom to put v1.deg into [0, |v1.rank|).
Reduction reduce_pair(ChargeVector v1, ChargeVector v2) {
    Reduction red{{}, v1, v2};
    while (red.v2.rank != 0) {
        long long dd = red.v2.deg, rr = red.v2.rank;
        // nearest integer to dd/rr, making |dd - nq*rr| <= |rr|/2
        long long nq = std::llround(static_cast<double>(dd) / static_cast<double>(rr));
        if (nq != 0) red.push(Move::twist(-nq));
        red.push(Move::fm());
    }
    if (red.v2.deg < 0) red.push(Move::shift());
    if (red.v1.rank != 0) {
        long long rr = red.v1.rank < 0 ? -red.v1.rank : red.v1.rank;
        long long want = mod_pos(red.v1.deg, rr);
        long long delta = want - red.v1.deg; // multiple of rr
        if (delta != 0) red.push(Move::twist(delta / red.v1.rank));
    }
    return red;
}

EquivalenceWord inverse_word(const EquivalenceWord& w) {
    EquivalenceWord inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (it->kind) {
            case Move::Kind::FM:
                inv.push_back(Move::fm());
                inv.push_back(Move::shift());
                break;
            case Move::Kind::Twist:
                inv.push_back(Move::twist(-it->n));
                break;
            case Move::Kind::Shift:
                inv.push_back(Move::shift());
                break;
        }
    }
    return inv;
}

} // namespace

std::optional<EquivalenceWord> find_connecting_word(ChargeVector v1, ChargeVector v2,
                                                    ChargeVector w1, ChargeVector w2) {
    if (v1.deg * v2.rank - v2.deg * v1.rank == 0 || w1.deg * w2.rank - w2.deg * w1.rank == 0)
        throw InvalidInput("pairs must have nonzero determinant");
    Reduction rv = reduce_pair(v1, v2);
    Reduction rw = reduce_pair(w1, w2);
    if (!(rv.v1 == rw.v1) || !(rv.v2 == rw.v2)) return std::nullopt;
    EquivalenceWord word = rv.word;
    EquivalenceWord back = inverse_word(rw.word);
    word.insert(word.end(), back.begin(), back.end());
    if (!(apply_word(word, v1) == w1) || !(apply_word(word, v2) == w2))
        throw Error("internal: connecting word verification failed");
    return word;
}

} // namespace skly
