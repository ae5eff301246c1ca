#include "qdl/poisson.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qdl {

namespace {
using std::numbers::pi;
}

double tilde_transform(const SmoothWeight& F, double xi, const QuadratureSpec& q) {
    double eps = F.eps();
    auto f = [&](double x) {
        double a = 2.0 * pi * xi * x;
        return (std::cos(a) + std::sin(a)) * F(x);
    };
    // split at the plateau joints; give the oscillation room to resolve
    QuadratureSpec qo = q;
    qo.max_depth = std::max(q.max_depth, 26);
    return integrate<double>(f, 1.0, 1.0 + eps, qo) +
           integrate<double>(f, 1.0 + eps, 2.0 - eps, qo) +
           integrate<double>(f, 2.0 - eps, 2.0, qo);
}

double poisson_lhs(i64 n, double X, double Y, const SmoothWeight& F) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("poisson_lhs: n must be odd positive");
    i64 lo = static_cast<i64>(std::floor(X));
    i64 hi = static_cast<i64>(std::ceil(2.0 * X));
    double acc = 0.0;
    for (i64 d = lo | 1; d <= hi; d += 2) {
        double w = F(static_cast<double>(d) / X);
        if (w == 0.0) continue;
        int ch = kronecker(d, n);
        if (!ch) continue;
        acc += static_cast<double>(m_y(d, Y)) * ch * w;
    }
    return acc / X;
}

PoissonRhs poisson_rhs(i64 n, double X, double Y, const SmoothWeight& F, const QuadratureSpec& q,
                       double tail_tol) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("poisson_rhs: n must be odd positive");
    const double F3 = F.norm(3);
    double total = 0.0, tail = 0.0;
    i64 k_max_seen = 0;

    for (i64 alpha = 1; static_cast<double>(alpha) <= Y; alpha += 2) {
        if (std::gcd(alpha, 2 * n) != 1) continue;
        int mu = 1;
        for (auto [p, e] : factorize(alpha)) {
            if (e > 1) { mu = 0; break; }
            mu = -mu;
        }
        if (mu == 0) continue;

        const double spacing = X / (2.0 * static_cast<double>(alpha) * alpha * n);
        // G_k is n-periodic-ish in size; |G_k(n)| <= n always
        const double term_scale = static_cast<double>(n);
        // truncate k once the order-3 integration-by-parts bound is small
        i64 K = 4;
        while (std::sqrt(2.0) * F3 / std::pow(2.0 * pi * spacing * static_cast<double>(K), 3.0) *
                   term_scale >
               tail_tol * 0.1)
            ++K;
        k_max_seen = std::max(k_max_seen, K);

        double asum = gauss_sum(0, n).real() * tilde_transform(F, 0.0, q);
        for (i64 k = 1; k <= K; ++k) {
            double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            cplx gk = gauss_sum(k, n), gmk = gauss_sum(-k, n);
            double xi = spacing * static_cast<double>(k);
            asum += sgn * (gk.real() * tilde_transform(F, xi, q) +
                           gmk.real() * tilde_transform(F, -xi, q));
        }
        // the Gauss sums here are real (real character); imaginary parts vanish
        total += static_cast<double>(mu) / (static_cast<double>(alpha) * alpha) * asum;
        tail += std::sqrt(2.0) * F3 * term_scale /
                (std::pow(2.0 * pi * spacing, 3.0) * (2.0 * static_cast<double>(K) * K)) /
                (static_cast<double>(alpha) * alpha);
    }
    double front = kronecker(2, n) / (2.0 * static_cast<double>(n));
    return {front * total, std::abs(front) * tail, k_max_seen};
}

}  // namespace qdl
