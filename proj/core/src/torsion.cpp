// SPDX-License-Identifier: Apache-2.0
#include "skly/torsion.hpp"

#include <algorithm>

namespace skly {

namespace {

bool point_before(const CurvePoint& a, const CurvePoint& b) {
    if (a.z().real() != b.z().real()) return a.z().real() < b.z().real();
    return a.z().imag() < b.z().imag();
}

void check_same_curve(const TorsionType& t1, const TorsionType& t2) {
    if (t1.empty() || t2.empty()) return;
    if (!t1.curve()->same_curve(*t2.curve()))
        throw CurveMismatch("torsion sheaves live on different curves");
}

} // namespace

TorsionType::TorsionType(std::vector<std::pair<CurvePoint, Partition>> support)
    : support_(std::move(support)) {
    support_.erase(std::remove_if(support_.begin(), support_.end(),
                                  [](const auto& e) { return e.second.empty(); }),
                   support_.end());
    for (std::size_t i = 0; i < support_.size(); ++i)
        for (std::size_t j = i + 1; j < support_.size(); ++j)
            if (support_[i].first.equals(support_[j].first))
                throw InvalidInput("support points must be pairwise distinct");
    std::sort(support_.begin(), support_.end(),
              [](const auto& a, const auto& b) { return point_before(a.first, b.first); });
}

int TorsionType::length() const {
    int n = 0;
    for (const auto& [p, lam] : support_) n += lam.size();
    return n;
}

int TorsionType::l_max() const {
    int m = 0;
    for (const auto& [p, lam] : support_) m = std::max(m, lam.length());
    return m;
}

Divisor TorsionType::cycle() const {
    std::vector<std::pair<CurvePoint, int>> e;
    e.reserve(support_.size());
    for (const auto& [p, lam] : support_) e.emplace_back(p, lam.size());
    return Divisor(std::move(e));
}

const CurvePtr& TorsionType::curve() const {
    static const CurvePtr none;
    return support_.empty() ? none : support_.front().first.curve();
}

std::vector<Partition> TorsionType::shape() const {
    std::vector<Partition> s;
    s.reserve(support_.size());
    for (const auto& [p, lam] : support_) s.push_back(lam);
    return s;
}

bool operator==(const TorsionType& a, const TorsionType& b) {
    if (a.support_.size() != b.support_.size()) return false;
    for (std::size_t i = 0; i < a.support_.size(); ++i) {
        if (!a.support_[i].first.equals(b.support_[i].first)) return false;
        if (!(a.support_[i].second == b.support_[i].second)) return false;
    }
    return true;
}

long long hom_dim_torsion(const TorsionType& t1, const TorsionType& t2) {
    check_same_curve(t1, t2);
    long long dim = 0;
    for (const auto& [p, lam] : t1.support())
        for (const auto& [q, mu] : t2.support())
            if (p.equals(q)) dim += hom_dim_local(lam, mu);
    return dim;
}

std::vector<TorsionType> extension_set(const TorsionType& t1, const TorsionType& t2) {
    check_same_curve(t1, t2);
    // union support with the local types (nu from the quotient t1, mu from
    // the sub t2)
    struct Local {
        CurvePoint point;
        Partition nu, mu;
    };
    std::vector<Local> locals;
    for (const auto& [p, lam] : t1.support()) locals.push_back({p, lam, Partition{}});
    for (const auto& [q, mu] : t2.support()) {
        bool found = false;
        for (auto& l : locals)
            if (l.point.equals(q)) {
                l.mu = mu;
                found = true;
                break;
            }
        if (!found) locals.push_back({q, Partition{}, mu});
    }

    std::vector<std::vector<Partition>> choices;
    choices.reserve(locals.size());
    for (const auto& l : locals) {
        if (l.nu.empty())
            choices.push_back({l.mu});
        else if (l.mu.empty())
            choices.push_back({l.nu});
        else {
            auto outer = lr_positive_outer(l.mu, l.nu);
            std::sort(outer.begin(), outer.end(),
                      [](const Partition& a, const Partition& b) { return b < a; });
            choices.push_back(std::move(outer));
        }
    }

    std::vector<TorsionType> out;
    std::vector<std::size_t> pick(locals.size(), 0);
    for (;;) {
        std::vector<std::pair<CurvePoint, Partition>> support;
        support.reserve(locals.size());
        for (std::size_t i = 0; i < locals.size(); ++i)
            support.emplace_back(locals[i].point, choices[i][pick[i]]);
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

} // namespace skly
