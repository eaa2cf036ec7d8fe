// SPDX-License-Identifier: Apache-2.0
#include "skly/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace skly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw InvalidInput("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int j = 1; j <= part(0); ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p >= j) ++cnt;
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

int Partition::multiplicity(int p) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), p));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

namespace {

void gen_partitions(int n, int maxpart, int maxlen, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (maxlen == 0) return;
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, maxlen - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> all_partitions(int n) {
    return partitions_max_length(n, n);
}

std::vector<Partition> partitions_max_length(int n, int maxlen) {
    if (n < 0) throw InvalidInput("partition size must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, maxlen, cur, out);
    return out;
}

std::vector<int> partition_to_lengths(const Partition& lam, int jmax) {
    if (jmax < 1) throw InvalidInput("jmax must be at least 1");
    std::vector<int> a(static_cast<std::size_t>(jmax));
    for (int j = 1; j <= jmax; ++j) {
        long long v = 0;
        for (int p = 1; p <= lam.part(0); ++p) {
            int mp = lam.multiplicity(p);
            if (mp == 0) continue;
            v += (p <= j) ? static_cast<long long>(p) * mp : static_cast<long long>(j) * mp;
        }
        a[static_cast<std::size_t>(j - 1)] = static_cast<int>(v);
    }
    return a;
}

Partition lengths_to_partition(const std::vector<int>& a) {
    if (a.empty()) throw InvalidLengthSequence("empty length sequence");
    // Differences d_j = a_j - a_{j-1} count the parts of size >= j, so they
    // must be weakly decreasing, nonnegative, and end at zero.
    std::vector<int> d;
    int prev = 0;
    for (int v : a) {
        d.push_back(v - prev);
        prev = v;
    }
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] < 0) throw InvalidLengthSequence("length sequence must be nondecreasing");
        if (j > 0 && d[j] > d[j - 1])
            throw InvalidLengthSequence("length sequence differences must be weakly decreasing");
    }
    if (d.back() != 0)
        throw InvalidLengthSequence("length sequence has not stabilized");
    std::vector<int> cols;
    for (int v : d)
        if (v > 0) cols.push_back(v);
    if (cols.empty()) return Partition{};
    return Partition(std::move(cols)).conjugate();
}

long long hom_dim_local(const Partition& lam, const Partition& mu) {
    long long s = 0;
    for (int p : lam.parts())
        for (int q : mu.parts()) s += std::min(p, q);
    return s;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson rule

namespace {

// Counts fillings of the skew shape lam/mu with content nu such that rows
// weakly increase, columns strictly increase, and the reverse reading word
// is a lattice word.  Boxes are filled in reverse reading order (row by
// row, right to left) so the lattice condition is checked incrementally.
struct LrCounter {
    const Partition& lam;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> fill; // fill[row][col], 0 = empty
    std::vector<int> used;              // content counters, 1-based values
    long long count = 0;

    bool column_ok(int row, int col, int v) const {
        if (row == 0) return true;
        if (col >= mu.part(row - 1)) {
            // box above is inside the skew shape only if col < lam_{row-1}
            if (col < lam.part(row - 1)) return fill[static_cast<std::size_t>(row - 1)]
                                                    [static_cast<std::size_t>(col)] < v;
        }
        return true;
    }

    void place(int row, int col);

    void next_box(int row, int col) {
        // advance right-to-left within the row, then to the next row
        while (row < lam.length()) {
            if (col >= mu.part(row)) {
                place(row, col);
                return;
            }
            ++row;
            if (row < lam.length()) col = lam.part(row) - 1;
        }
        ++count;
    }
};

void LrCounter::place(int row, int col) {
    int right = (col + 1 < lam.part(row))
                    ? fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)]
                    : static_cast<int>(used.size());
    for (int v = 1; v <= right; ++v) {
        if (used[static_cast<std::size_t>(v - 1)] >= nu.part(v - 1)) continue;
        if (!column_ok(row, col, v)) continue;
        // lattice condition on the reverse reading word
        if (v > 1 && used[static_cast<std::size_t>(v - 1)] + 1 > used[static_cast<std::size_t>(v - 2)])
            continue;
        fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        used[static_cast<std::size_t>(v - 1)] += 1;
        if (col - 1 >= mu.part(row))
            next_box(row, col - 1);
        else
            next_box(row + 1, row + 1 < lam.length() ? lam.part(row + 1) - 1 : 0);
        used[static_cast<std::size_t>(v - 1)] -= 1;
        fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
    }
}

} // namespace

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() != mu.size() + nu.size()) return 0;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lam.part(i)) return 0; // mu must fit inside lam
    if (nu.empty()) return 1;                   // shape lam/mu empty too by the size check
    if (mu.empty()) return lam == nu ? 1 : 0;
    LrCounter ctr{lam, mu, nu, {}, {}, 0};
    ctr.fill.assign(static_cast<std::size_t>(lam.length()), {});
    for (int r = 0; r < lam.length(); ++r)
        ctr.fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lam.part(r)), 0);
    ctr.used.assign(static_cast<std::size_t>(nu.length()), 0);
    ctr.next_box(0, lam.part(0) - 1);
    return ctr.count;
}

std::vector<Partition> lr_positive_outer(const Partition& mu, const Partition& nu) {
    std::vector<Partition> out;
    for (const Partition& lam : all_partitions(mu.size() + nu.size()))
        if (lr_coefficient(lam, mu, nu) > 0) out.push_back(lam);
    return out;
}

} // namespace skly
