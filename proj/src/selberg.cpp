#include "qdl/selberg.hpp"

#include <cmath>
#include <numbers>

namespace qdl {

namespace {

using std::numbers::pi;

struct BoundaryZero {};  // |f| below threshold at a quadrature node

double log_abs_checked(cplx v) {
    double a = std::abs(v);
    if (a < 1e-12) throw BoundaryZero{};
    return std::log(a);
}

}  // namespace

EdgeArgTracker::EdgeArgTracker(const std::function<cplx(cplx)>& f, double x0, double H)
    : f_(f), x0_(x0) {
    // march from -H to H, splitting until successive phase increments < pi/2
    std::vector<double> ts{-H, H};
    std::vector<cplx> vs{f(cplx(x0, -H)), f(cplx(x0, H))};
    for (std::size_t i = 0; i + 1 < ts.size();) {
        double a0 = std::arg(vs[i]), a1 = std::arg(vs[i + 1]);
        double d = std::remainder(a1 - a0, 2.0 * pi);
        if (std::abs(d) < 0.5 * pi || ts[i + 1] - ts[i] < 1e-12 * H) {
            ++i;
            continue;
        }
        double tm = 0.5 * (ts[i] + ts[i + 1]);
        ts.insert(ts.begin() + static_cast<std::ptrdiff_t>(i) + 1, tm);
        vs.insert(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1, f(cplx(x0, tm)));
    }
    ts_ = std::move(ts);
    args_.resize(ts_.size());
    args_[0] = std::arg(vs[0]);
    for (std::size_t i = 1; i < ts_.size(); ++i)
        args_[i] = args_[i - 1] + std::remainder(std::arg(vs[i]) - std::arg(vs[i - 1]), 2.0 * pi);
}

cplx EdgeArgTracker::log_f(double t) const {
    cplx w = f_(cplx(x0_, t));
    auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
    std::size_t i = it == ts_.begin() ? 0 : static_cast<std::size_t>(it - ts_.begin()) - 1;
    if (i >= ts_.size() - 1) i = ts_.size() - 2;
    // interpolate the tracked argument and snap the principal branch to it
    double f0 = args_[i], f1 = args_[i + 1];
    double frac = (t - ts_[i]) / (ts_[i + 1] - ts_[i]);
    double guess = f0 + frac * (f1 - f0);
    double a = std::arg(w);
    double k = std::round((guess - a) / (2.0 * pi));
    return {log_abs_checked(w), a + 2.0 * pi * k};
}

namespace {

SelbergRhs selberg_rhs_once(const AnalyticFunction& fn, const SelbergBox& box,
                            const QuadratureSpec& q) {
    const double W0 = box.W0, W1 = box.W1, H = box.H;
    const auto& f = fn.f;

    auto left = [&](double t) {
        return std::cos(pi * t / (2.0 * H)) * log_abs_checked(f(cplx(W0, t)));
    };
    double I1 = integrate<double>(left, -H, 0.0, q) + integrate<double>(left, 0.0, H, q);

    auto horiz = [&](double a) {
        return std::sinh(pi * (a - W0) / (2.0 * H)) *
               (log_abs_checked(f(cplx(a, H))) + log_abs_checked(f(cplx(a, -H))));
    };
    double I2 = integrate<double>(horiz, W0, W1, q);

    EdgeArgTracker tracker(f, W1, H);
    auto right = [&](double t) -> double {
        cplx z = pi / (2.0 * H) * cplx(t, -(W1 - W0));
        return -(std::cos(z) * tracker.log_f(t)).real();
    };
    double I3 = integrate<double>(right, -H, 0.0, q) + integrate<double>(right, 0.0, H, q);

    return {I1 + I2 + I3, I1, I2, I3, 0};
}

}  // namespace

SelbergRhs selberg_rhs(const AnalyticFunction& fn, const SelbergBox& box, const QuadratureSpec& q) {
    if (fn.nonvanishing_abscissa > box.W1)
        throw std::invalid_argument("selberg_rhs: right edge must lie in the zero-free half-plane");
    SelbergBox b = box;
    for (int attempt = 0;; ++attempt) {
        try {
            SelbergRhs r = selberg_rhs_once(fn, b, q);
            r.perturbations = attempt;
            return r;
        } catch (const BoundaryZero&) {
            if (attempt >= 3)
                throw std::runtime_error(
                    "selberg_rhs: |f| vanishes on the box boundary after 3 perturbations");
            b.H *= 1.0 + 1e-4;
        }
    }
}

double selberg_lhs(const std::vector<cplx>& zeros, const SelbergBox& box) {
    double acc = 0.0;
    for (cplx z : zeros) {
        double beta = z.real(), gamma = z.imag();
        if (beta < box.W0 || beta > box.W1 || std::abs(gamma) > box.H) continue;
        acc += std::cos(pi * gamma / (2.0 * box.H)) *
               std::sinh(pi * (beta - box.W0) / (2.0 * box.H));
    }
    return 4.0 * box.H * acc;
}

double real_zero_threshold(double R, double S) {
    if (R <= 0.0 || S <= 0.0) throw std::invalid_argument("real_zero_threshold: R, S must be > 0");
    return 8.0 * S * std::sinh(pi * R / (2.0 * S));
}

MollifiedCount mollified_count(const Discriminant& d, const LambdaTable& table, double R, double S,
                               double logX, double sigma0, const QuadratureSpec& q) {
    CompletedL eng(d);
    auto f = [&](cplx s) { return eng.l(s) * m_poly(s, d, table); };

    auto I1f = [&](double t) {
        return std::cos(pi * t / (2.0 * S)) *
               std::log(std::abs(f(cplx(0.5 - R / logX, t / logX))));
    };
    double I1 = integrate<double>(I1f, -S, 0.0, q) + integrate<double>(I1f, 0.0, S, q);

    double U = (sigma0 - 0.5) * logX;
    auto I2f = [&](double x) {
        return std::sinh(pi * (x + R) / (2.0 * S)) * 2.0 *
               std::log(std::abs(f(cplx(0.5 + x / logX, S / logX))));
    };
    // refine near the growing right end separately
    double I2 = integrate<double>(I2f, -R, 0.5 * U, q) + integrate<double>(I2f, 0.5 * U, U, q);

    std::function<cplx(cplx)> fs = f;
    EdgeArgTracker tracker(fs, sigma0, S / logX);
    auto I3f = [&](double t) -> double {
        cplx z = pi / (2.0 * S) * cplx(t, -((sigma0 - 0.5) * logX - R));
        return -(std::cos(z) * tracker.log_f(t / logX)).real();
    };
    double I3 = integrate<double>(I3f, -S, 0.0, q) + integrate<double>(I3f, 0.0, S, q);

    return {I1, I2, I3};
}

}  // namespace qdl
