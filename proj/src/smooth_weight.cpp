#include "qdl/smooth_weight.hpp"

#include <cmath>
#include <stdexcept>

namespace qdl {

namespace {

// g(x) = exp(-1/x) for x > 0, with derivatives
//   g'   = g/x^2,  g'' = g(1-2x)/x^4,  g''' = g(1-6x+6x^2)/x^6.
struct GVals {
    double g, g1, g2, g3;
};

GVals g_all(double x) {
    if (x <= 0.0) return {0.0, 0.0, 0.0, 0.0};
    double e = std::exp(-1.0 / x);
    double x2 = x * x, x4 = x2 * x2;
    return {e, e / x2, e * (1.0 - 2.0 * x) / x4, e * (1.0 - 6.0 * x + 6.0 * x2) / (x4 * x2)};
}

// smoothstep h = u/(u+v), u = g(x), v = g(1-x); h(0)=0, h(1)=1, all derivatives
// vanish at both ends.
void h_all(double x, double out[4]) {
    if (x <= 0.0) {
        out[0] = out[1] = out[2] = out[3] = 0.0;
        return;
    }
    if (x >= 1.0) {
        out[0] = 1.0;
        out[1] = out[2] = out[3] = 0.0;
        return;
    }
    GVals u = g_all(x);
    GVals vg = g_all(1.0 - x);
    double v = vg.g, v1 = -vg.g1, v2 = vg.g2, v3 = -vg.g3;

    double den = u.g + v;
    double den1 = u.g1 + v1, den2 = u.g2 + v2, den3 = u.g3 + v3;
    double N = u.g1 * v - u.g * v1;
    double N1 = u.g2 * v - u.g * v2;
    double N2 = u.g3 * v + u.g2 * v1 - u.g1 * v2 - u.g * v3;

    out[0] = u.g / den;
    double d2 = den * den;
    out[1] = N / d2;
    out[2] = (N1 * den - 2.0 * N * den1) / (d2 * den);
    out[3] = (N2 * d2 - 4.0 * N1 * den * den1 - 2.0 * N * den * den2 + 6.0 * N * den1 * den1) /
             (d2 * d2);
}

}  // namespace

SmoothWeight::SmoothWeight(double eps) : eps_(eps) {
    if (eps <= 0.0 || eps >= 0.5)
        throw std::invalid_argument("SmoothWeight: eps must lie in (0, 1/2)");
}

double SmoothWeight::deriv(int j, double t) const {
    if (j < 0 || j > 3) throw std::invalid_argument("SmoothWeight::deriv: order must be 0..3");
    if (t <= 1.0 || t >= 2.0) return 0.0;
    if (t < 1.0 + eps_) {
        double h[4];
        h_all((t - 1.0) / eps_, h);
        return h[j] / std::pow(eps_, j);
    }
    if (t > 2.0 - eps_) {
        double h[4];
        h_all((2.0 - t) / eps_, h);
        return (j % 2 ? -1.0 : 1.0) * h[j] / std::pow(eps_, j);
    }
    return j == 0 ? 1.0 : 0.0;
}

double SmoothWeight::norm(int nu) const {
    if (nu < 0 || nu > 3) throw std::invalid_argument("SmoothWeight::norm: order must be 0..3");
    QuadratureSpec q(1e-11, 1e-9, 24);
    double m = 0.0;
    for (int j = 0; j <= nu; ++j) {
        if (norms_[j] < 0.0) {
            // |Phi^{(j)}| is supported on the two ramps for j >= 1
            double v;
            if (j == 0) {
                v = integrate<double>([&](double t) { return deriv(0, t); }, 1.0, 2.0, q);
            } else {
                auto f = [&](double t) { return std::abs(deriv(j, t)); };
                v = integrate<double>(f, 1.0, 1.0 + eps_, q) +
                    integrate<double>(f, 2.0 - eps_, 2.0, q);
            }
            norms_[j] = v;
        }
        m = std::max(m, norms_[j]);
    }
    return m;
}

cplx mellin_weight(cplx w, const SmoothWeight& phi, const QuadratureSpec& q) {
    if (w.real() <= -1.0)
        throw std::domain_error("mellin_weight: requires Re w > -1");
    double eps = phi.eps();
    auto f = [&](double y) { return phi(y) * std::exp(w * std::log(y)); };
    return integrate<cplx>(f, 1.0, 1.0 + eps, q) +
           integrate<cplx>(f, 1.0 + eps, 2.0 - eps, q) +
           integrate<cplx>(f, 2.0 - eps, 2.0, q);
}

}  // namespace qdl
