// SPDX-License-Identifier: Apache-2.0
#include "skly/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace skly {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kThetaBudget = 64;
constexpr int kAgmBudget = 64;

struct ThetaValues {
    cplx t1, t2, t3, t4;
};

// All four theta values at z, nome q.  Assumes z already reduced so that
// |Im z| <~ pi*Im(tau)/2; the series then converges like q^(n^2).
ThetaValues theta_series(cplx z, cplx q) {
    const cplx G = std::exp(cplx(0, 1) * z);   // e^{iz}
    const cplx Gi = 1.0 / G;
    const cplx E = G * G;                      // e^{2iz}
    const cplx Ei = Gi * Gi;

    cplx t1 = 0, t2 = 0, t3 = 1, t4 = 1;
    const cplx q2 = q * q;
    cplx qn2 = 1;        // q^{n^2}
    cplx qn2_step = q;   // q^{2n+1}
    cplx qh = std::pow(q, 0.25); // q^{(n+1/2)^2}
    cplx qh_step = q2;   // q^{2n+2}
    cplx Godd = G, Goddi = Gi, En = 1, Eni = 1;
    double sign = 1.0;

    int n = 0;
    for (;; ++n) {
        if (n == kThetaBudget) throw NonconvergentSeries("theta series did not converge");
        // n-th terms; for n = 0 the t3/t4 increments are absorbed in the init.
        cplx inc1 = sign * qh * (Godd - Goddi) / cplx(0, 1);
        cplx inc2 = qh * (Godd + Goddi);
        t1 += inc1;
        t2 += inc2;
        double incmax = std::max(std::abs(inc1), std::abs(inc2));
        if (n > 0) {
            cplx common = qn2 * (En + Eni);
            cplx inc3 = common;
            cplx inc4 = sign * common;
            t3 += inc3;
            t4 += inc4;
            incmax = std::max(incmax, std::abs(common));
        }
        double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4)});
        if (n >= 3 && incmax < 1e-16 * scale) break;
        // advance powers to n+1
        qn2 *= qn2_step;
        qn2_step *= q2;
        qh *= qh_step;
        qh_step *= q2;
        Godd *= E;
        Goddi *= Ei;
        En *= E;
        Eni *= Ei;
        sign = -sign;
    }
    return {t1, t2, t3, t4};
}

struct ReducedArg {
    cplx zr;    // reduced argument
    long m = 0; // pi shifts removed
    long n = 0; // pi*tau shifts removed
};

ReducedArg reduce_theta_arg(cplx z, cplx tau) {
    ReducedArg r;
    r.n = std::lround(z.imag() / (kPi * tau.imag()));
    cplx z1 = z - static_cast<double>(r.n) * kPi * tau;
    r.m = std::lround(z1.real() / kPi);
    r.zr = z1 - static_cast<double>(r.m) * kPi;
    return r;
}

cplx agm(cplx a, cplx g) {
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kAgmBudget; ++i) {
        double gap = std::abs(a - g);
        if (gap <= 4e-16 * std::abs(a) || (i > 4 && gap >= prev)) return a;
        prev = gap;
        cplx a1 = (a + g) / 2.0;
        cplx g1 = std::sqrt(a * g);
        if (std::abs(a1 - g1) > std::abs(a1 + g1)) g1 = -g1;
        a = a1;
        g = g1;
    }
    throw NonconvergentSeries("AGM iteration did not converge");
}

} // namespace

// ---------------------------------------------------------------------------
// LatticeCurve

std::shared_ptr<const LatticeCurve> LatticeCurve::make(cplx tau, int subdivision) {
    if (!(tau.imag() > 0.0)) throw InvalidInput("tau must have positive imaginary part");
    if (subdivision < 1) throw InvalidInput("subdivision must be a positive integer");
    auto c = std::shared_ptr<LatticeCurve>(new LatticeCurve());
    c->tau_ = tau;
    c->s_ = subdivision;
    c->q_ = std::exp(cplx(0, 1) * kPi * tau);
    ThetaValues t0 = theta_series(cplx(0, 0), c->q_);
    c->th2_ = t0.t2;
    c->th3_ = t0.t3;
    c->th4_ = t0.t4;
    c->k_ = (t0.t2 * t0.t2) / (t0.t3 * t0.t3);
    c->bigK_ = kPi / 2.0 * t0.t3 * t0.t3;
    c->rho_ = 4.0 * c->bigK_;
    for (int i = 0; i < subdivision; ++i)
        for (int j = 0; j < subdivision; ++j)
            c->torsion_.push_back((cplx(static_cast<double>(i), 0) +
                                   cplx(static_cast<double>(j), 0) * tau) /
                                  static_cast<double>(subdivision));
    // pairwise distinctness of torsion representatives and their separation
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c->torsion_.size(); ++i)
        for (std::size_t j = i + 1; j < c->torsion_.size(); ++j) {
            double d = lattice_distance(c->torsion_[i] - c->torsion_[j], cplx(1, 0), tau);
            if (d < 1e-12)
                throw InvalidInput("torsion points are not pairwise distinct");
            sep = std::min(sep, d);
        }
    c->torsion_sep_ = c->torsion_.size() > 1 ? sep : 1.0;
    return c;
}

double LatticeCurve::lattice_distance(cplx z, cplx w1, cplx w2) {
    cplx ratio = w2 / w1;
    cplx zw = z / w1;
    double y = zw.imag() / ratio.imag();
    double x = zw.real() - y * ratio.real();
    double best = std::numeric_limits<double>::infinity();
    long mx = std::lround(x), ny = std::lround(y);
    for (long dm = -1; dm <= 1; ++dm)
        for (long dn = -1; dn <= 1; ++dn) {
            cplx p = static_cast<double>(mx + dm) * w1 + static_cast<double>(ny + dn) * w2;
            best = std::min(best, std::abs(z - p));
        }
    return best;
}

cplx LatticeCurve::lattice_reduce(cplx z, cplx w1, cplx w2) {
    cplx ratio = w2 / w1;
    cplx zw = z / w1;
    double y = zw.imag() / ratio.imag();
    double x = zw.real() - y * ratio.real();
    double xf = x - std::floor(x);
    double yf = y - std::floor(y);
    // snap values that round to the cell boundary back to zero
    if (xf > 1.0 - 1e-13) xf = 0.0;
    if (yf > 1.0 - 1e-13) yf = 0.0;
    return xf * w1 + yf * w2;
}

// ---------------------------------------------------------------------------
// CurvePoint / Divisor

CurvePoint::CurvePoint(cplx z, CurvePtr curve) : curve_(std::move(curve)) {
    if (!curve_) throw InvalidInput("curve point requires a curve");
    z_ = LatticeCurve::lattice_reduce(z, curve_->omega1(), curve_->omega2());
}

bool CurvePoint::equals(const CurvePoint& other, double tol) const {
    if (!curve_ || !other.curve_ || !curve_->same_curve(*other.curve_))
        throw CurveMismatch("points live on different curves");
    return LatticeCurve::lattice_distance(z_ - other.z_, curve_->omega1(), curve_->omega2()) < tol;
}

Divisor::Divisor(std::vector<std::pair<CurvePoint, int>> entries) {
    for (auto& [p, m] : entries) {
        if (m == 0) continue;
        bool merged = false;
        for (auto& [q, n] : entries_) {
            if (p.equals(q)) {
                n += m;
                merged = true;
                break;
            }
        }
        if (!merged) entries_.emplace_back(p, m);
    }
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [](const auto& e) { return e.second == 0; }),
                   entries_.end());
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [p, m] : entries_) d += m;
    return d;
}

cplx Divisor::weighted_sum() const {
    cplx s = 0;
    for (const auto& [p, m] : entries_) s += static_cast<double>(m) * p.z();
    return s;
}

const CurvePtr& Divisor::curve() const {
    static const CurvePtr none;
    return entries_.empty() ? none : entries_.front().first.curve();
}

Divisor Divisor::scaled(int m) const {
    std::vector<std::pair<CurvePoint, int>> e;
    e.reserve(entries_.size());
    for (const auto& [p, n] : entries_) e.emplace_back(p, n * m);
    return Divisor(std::move(e));
}

// ---------------------------------------------------------------------------
// Jacobi functions

std::tuple<cplx, cplx, cplx> jacobi_sn_cn_dn(cplx lambda, cplx k, double pole_tol) {
    if (std::abs(k) < 1e-12 || std::abs(k - 1.0) < 1e-12 || std::abs(k + 1.0) < 1e-12)
        throw InvalidInput("elliptic modulus must avoid 0 and +-1");
    cplx kp = std::sqrt(1.0 - k * k);
    cplx bigK = kPi / (2.0 * agm(cplx(1, 0), kp));
    cplx bigKp = kPi / (2.0 * agm(cplx(1, 0), k));
    cplx tauJ = cplx(0, 1) * bigKp / bigK;
    if (!(tauJ.imag() > 0.0)) throw NonconvergentSeries("period ratio has no positive imaginary part");
    cplx q = std::exp(cplx(0, 1) * kPi * tauJ);

    cplx zeta = kPi * lambda / (2.0 * bigK);
    ReducedArg red = reduce_theta_arg(zeta, tauJ);
    // poles of sn/cn/dn at zeros of theta4: (m + 1/2 tau) * pi
    double dist = LatticeCurve::lattice_distance(red.zr - kPi * tauJ / 2.0, cplx(kPi, 0), kPi * tauJ);
    if (dist * std::abs(2.0 * bigK / kPi) < pole_tol)
        throw PoleEvaluation("lambda is within tolerance of a pole of sn/cn/dn");

    ThetaValues t0 = theta_series(cplx(0, 0), q);
    ThetaValues t = theta_series(red.zr, q);
    double sm = (red.m % 2 == 0) ? 1.0 : -1.0;
    double sn_ = (red.n % 2 == 0) ? 1.0 : -1.0;
    cplx sn = sm * t0.t3 * t.t1 / (t0.t2 * t.t4);
    cplx cn = sm * sn_ * t0.t4 * t.t2 / (t0.t2 * t.t4);
    cplx dn = sn_ * t0.t4 * t.t3 / (t0.t3 * t.t4);
    return {sn, cn, dn};
}

// ---------------------------------------------------------------------------
// w functions

std::tuple<cplx, cplx, cplx> w_functions(cplx lambda, const LatticeCurve& curve, double pole_tol) {
    double dist = LatticeCurve::lattice_distance(lambda, cplx(0.5, 0), curve.tau() / 2.0);
    if (dist < pole_tol) throw PoleEvaluation("lambda is within tolerance of a torsion point");

    cplx zeta = 2.0 * kPi * lambda;
    ReducedArg red = reduce_theta_arg(zeta, curve.tau());
    ThetaValues t = theta_series(red.zr, curve.nome());
    double sm = (red.m % 2 == 0) ? 1.0 : -1.0;
    double sn_ = (red.n % 2 == 0) ? 1.0 : -1.0;
    cplx th2 = curve.theta2_0(), th3 = curve.theta3_0(), th4 = curve.theta4_0();
    cplx rho = curve.rho();
    cplx w1 = sm * rho * th2 / th3 * t.t4 / t.t1;
    cplx w2 = sm * sn_ * rho * th2 * th4 / (th3 * th3) * t.t3 / t.t1;
    cplx w3 = sn_ * rho * th4 / th3 * t.t2 / t.t1;
    return {w1, w2, w3};
}

std::tuple<cplx, cplx, cplx> w_derivatives(cplx lambda, const LatticeCurve& curve, double pole_tol) {
    auto [w1, w2, w3] = w_functions(lambda, curve, pole_tol);
    return {-w2 * w3, -w1 * w3, -w1 * w2};
}

std::tuple<cplx, cplx, cplx> j_constants(const LatticeCurve& curve, double constancy_tol) {
    // Deterministic interior sample points, kept well away from the poles.
    static const double xs[] = {0.231, 0.367, 0.411, 0.289, 0.343, 0.271, 0.393, 0.317};
    static const double ys[] = {0.279, 0.331, 0.243, 0.401, 0.289, 0.357, 0.263, 0.383};
    cplx s31 = 0, s32 = 0;
    double dev = 0.0;
    cplx first31, first32;
    for (int i = 0; i < 8; ++i) {
        cplx lam = cplx(xs[i], 0) + cplx(ys[i], 0) * curve.tau();
        auto [w1, w2, w3] = w_functions(lam, curve);
        cplx d31 = w1 * w1 - w3 * w3;
        cplx d32 = w2 * w2 - w3 * w3;
        if (i == 0) {
            first31 = d31;
            first32 = d32;
        } else {
            dev = std::max({dev, std::abs(d31 - first31), std::abs(d32 - first32)});
        }
        s31 += d31;
        s32 += d32;
    }
    double scale = std::max({1.0, std::abs(first31), std::abs(first32)});
    if (dev > constancy_tol * scale)
        throw NonconstantDifference("sampled w_a^2 - w_b^2 differences are not constant");
    cplx J31 = s31 / 8.0, J32 = s32 / 8.0;
    return {J31 - J32, J31, J32};
}

// ---------------------------------------------------------------------------
// Contour quadrature

namespace {

std::vector<cplx> laurent_pass(const std::function<cplx(cplx)>& f, cplx center, int order_min,
                               int order_max, double radius, int samples) {
    std::vector<cplx> vals(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        double th = 2.0 * kPi * j / samples;
        vals[static_cast<std::size_t>(j)] = f(center + radius * std::exp(cplx(0, th)));
    }
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(order_max - order_min + 1));
    for (int norder = order_min; norder <= order_max; ++norder) {
        cplx acc = 0;
        for (int j = 0; j < samples; ++j) {
            double th = 2.0 * kPi * j / samples;
            acc += vals[static_cast<std::size_t>(j)] *
                   std::pow(radius, -norder) * std::exp(cplx(0, -norder * th));
        }
        out.push_back(acc / static_cast<double>(samples));
    }
    return out;
}

} // namespace

std::vector<cplx> laurent_coefficients(const std::function<cplx(cplx)>& f, cplx center,
                                       int order_min, int order_max, const LaurentOptions& opt) {
    if (order_max < order_min) throw InvalidInput("empty order range");
    if (opt.radius <= 0.0) throw InvalidInput("radius must be positive");
    auto coarse = laurent_pass(f, center, order_min, order_max, opt.radius, opt.samples);
    auto fine = laurent_pass(f, center, order_min, order_max, opt.radius, 2 * opt.samples);
    double scale = 1.0;
    for (const auto& c : fine) scale = std::max(scale, std::abs(c));
    for (std::size_t i = 0; i < fine.size(); ++i)
        if (std::abs(fine[i] - coarse[i]) > opt.divergence_tol * scale)
            throw QuadratureDivergence("contour quadrature did not converge");
    return fine;
}

bool abel_jacobi_equivalent(const Divisor& d1, const Divisor& d2, double tol) {
    if (d1.entries().empty() && d2.entries().empty()) return true;
    const CurvePtr& c1 = d1.curve();
    const CurvePtr& c2 = d2.curve();
    if (c1 && c2 && !c1->same_curve(*c2))
        throw CurveMismatch("divisors live on different curves");
    const CurvePtr& c = c1 ? c1 : c2;
    if (d1.degree() != d2.degree()) return false;
    cplx diff = d1.weighted_sum() - d2.weighted_sum();
    return LatticeCurve::lattice_distance(diff, c->omega1(), c->omega2()) < tol;
}

} // namespace skly
