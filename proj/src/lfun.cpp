#include "qdl/lfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdl/special.hpp"

namespace qdl {

namespace {
using std::numbers::pi;
}

cplx l_value(cplx s, const Discriminant& d) {
    i64 q = d.conductor();
    if (q > 1000000)
        throw std::length_error("l_value: conductor exceeds the 10^6 evaluation budget");
    if (std::abs(s - cplx(1.0)) < 1e-8) {
        // character sum kills the Hurwitz pole; the finite part is -psi(a/q)
        double sum = 0.0;
        for (i64 a = 1; a <= q; ++a) {
            int ch = d.chi(a);
            if (ch) sum -= ch * digamma(static_cast<double>(a) / q);
        }
        return sum / static_cast<double>(q);
    }
    cplx sum = 0.0;
    for (i64 a = 1; a <= q; ++a) {
        int ch = d.chi(a);
        if (ch) sum += static_cast<double>(ch) * hurwitz_zeta(s, static_cast<double>(a) / q);
    }
    return pow_negs(std::log(static_cast<double>(q)), s) * sum;
}

cplx xi_value(cplx s, const Discriminant& d) {
    double lqp = std::log(d.conductor() / pi);
    return std::exp((0.5 * s - 0.25) * lqp) * gamma(0.5 * s + 0.5) * l_value(s, d);
}

// ---------- theta-integral engine ----------

CompletedL::CompletedL(Discriminant d, double tol) : d_(d) {
    const double q = static_cast<double>(d_.conductor());
    const double C = std::max(40.0, -std::log(tol) + 14.0);
    const double U = std::log(q * C / pi);
    const int panels = std::max(24, static_cast<int>(std::ceil(U / 0.1)));

    const i64 ncut_max = static_cast<i64>(std::ceil(std::sqrt(q * C / pi))) + 1;
    std::vector<double> coef(static_cast<std::size_t>(ncut_max) + 1, 0.0);
    for (i64 n = 1; n <= ncut_max; ++n) {
        int ch = d_.chi(n);
        if (ch) coef[static_cast<std::size_t>(n)] = static_cast<double>(ch) * static_cast<double>(n);
    }

    nodes_.reserve(static_cast<std::size_t>(panels) * 15);
    weights_.reserve(nodes_.capacity());
    const double h = U / panels;
    for (int kp = 0; kp < panels; ++kp) {
        double a = kp * h, c = a + 0.5 * h, hw = 0.5 * h;
        for (int i = 0; i < 15; ++i) {
            nodes_.push_back(c + hw * detail::kronrod_x[i]);
            weights_.push_back(hw * detail::kronrod_w[i]);
        }
    }
    theta_.resize(nodes_.size());
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        double t = std::exp(nodes_[j]);
        double e = pi * t / q;
        i64 ncut = static_cast<i64>(std::ceil(std::sqrt(C / e)));
        ncut = std::min(ncut, ncut_max);
        double th = 0.0;
        for (i64 n = ncut; n >= 1; --n) {  // ascending magnitude
            double cn = coef[static_cast<std::size_t>(n)];
            if (cn != 0.0) th += cn * std::exp(-e * static_cast<double>(n) * static_cast<double>(n));
        }
        theta_[j] = th;
    }
}

cplx CompletedL::lambda(cplx s) const {
    cplx acc = 0.0;
    cplx e1 = 0.5 * (s + 1.0), e2 = 0.5 * (2.0 - s);
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        double u = nodes_[j];
        acc += weights_[j] * theta_[j] * (std::exp(e1 * u) + std::exp(e2 * u));
    }
    return acc;
}

double CompletedL::lambda(double sigma) const {
    double acc = 0.0;
    double e1 = 0.5 * (sigma + 1.0), e2 = 0.5 * (2.0 - sigma);
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        double u = nodes_[j];
        acc += weights_[j] * theta_[j] * (std::exp(e1 * u) + std::exp(e2 * u));
    }
    return acc;
}

cplx CompletedL::xi(cplx s) const {
    return lambda(s) * std::pow(d_.conductor() / pi, -0.75);
}

double CompletedL::xi(double sigma) const {
    return lambda(sigma) * std::pow(d_.conductor() / pi, -0.75);
}

cplx CompletedL::l(cplx s) const {
    double lqp = std::log(d_.conductor() / pi);
    return lambda(s) * std::exp(-0.5 * (s + 1.0) * lqp) / gamma(0.5 * (s + 1.0));
}

double CompletedL::l(double sigma) const {
    double lqp = std::log(d_.conductor() / pi);
    return lambda(sigma) * std::exp(-0.5 * (sigma + 1.0) * lqp) / std::tgamma(0.5 * (sigma + 1.0));
}

std::vector<double> CompletedL::l_on_grid(double sigma0, double step, int count) const {
    const std::size_t m = nodes_.size();
    std::vector<double> A(m), B(m), fA(m), fB(m);
    for (std::size_t j = 0; j < m; ++j) {
        double u = nodes_[j];
        A[j] = std::exp(0.5 * (sigma0 + 1.0) * u);
        B[j] = std::exp(0.5 * (2.0 - sigma0) * u);
        fA[j] = std::exp(0.5 * step * u);
        fB[j] = 1.0 / fA[j];
    }
    double lqp = std::log(d_.conductor() / pi);
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        double sigma = sigma0 + k * step;
        double lam = 0.0;
        for (std::size_t j = 0; j < m; ++j) lam += weights_[j] * theta_[j] * (A[j] + B[j]);
        out[static_cast<std::size_t>(k)] =
            lam * std::exp(-0.5 * (sigma + 1.0) * lqp) / std::tgamma(0.5 * (sigma + 1.0));
        for (std::size_t j = 0; j < m; ++j) {
            A[j] *= fA[j];
            B[j] *= fB[j];
        }
    }
    return out;
}

std::vector<double> CompletedL::xi_critical_grid(double t0, double step, int count) const {
    // Lambda(1/2+it) = sum w theta e^{3u/4} * 2 cos(u t / 2): manifestly real
    const std::size_t m = nodes_.size();
    std::vector<double> c0(m);
    std::vector<cplx> z(m), rot(m);
    for (std::size_t j = 0; j < m; ++j) {
        double u = nodes_[j];
        c0[j] = weights_[j] * theta_[j] * std::exp(0.75 * u);
        z[j] = std::polar(1.0, 0.5 * u * t0);
        rot[j] = std::polar(1.0, 0.5 * u * step);
    }
    double norm = std::pow(d_.conductor() / pi, -0.75);
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += c0[j] * z[j].real();
        out[static_cast<std::size_t>(k)] = 2.0 * acc * norm;
        for (std::size_t j = 0; j < m; ++j) z[j] *= rot[j];
    }
    return out;
}

// ---------- the AFE kernel ----------

cplx w_kernel(double x, cplx delta, cplx tau, const QuadratureSpec& q, double c) {
    if (x <= 0.0) throw std::invalid_argument("w_kernel: argument must be positive");
    if (c <= std::abs(tau.real()))
        throw std::invalid_argument("w_kernel: contour abscissa must exceed |Re tau|");
    double T = q.contour_truncation;
    double lx = std::log(x);
    auto f = [&](double t) -> cplx {
        cplx s(c, t);
        return gamma_delta(s, delta) * std::exp(-s * lx) * 2.0 * s / (s * s - tau * tau);
    };
    double err = 0.0;
    cplx val = integrate<cplx>(f, -T, 0.0, q, &err) + integrate<cplx>(f, 0.0, T, q, &err);
    return val / (2.0 * pi);
}

WKernelTable::WKernelTable(cplx delta, cplx tau, const QuadratureSpec& q, double c) : c_(c) {
    if (c <= std::abs(tau.real()))
        throw std::invalid_argument("WKernelTable: contour abscissa must exceed |Re tau|");
    double T = q.contour_truncation;
    const double h = 0.08;
    i64 n = static_cast<i64>(std::ceil(2.0 * T / h));
    t_.resize(static_cast<std::size_t>(n));
    k_.resize(static_cast<std::size_t>(n));
    for (i64 j = 0; j < n; ++j) {
        double t = -T + (static_cast<double>(j) + 0.5) * h;
        cplx s(c, t);
        t_[static_cast<std::size_t>(j)] = t;
        k_[static_cast<std::size_t>(j)] =
            gamma_delta(s, delta) * 2.0 * s / (s * s - tau * tau) * (h / (2.0 * pi));
    }
}

cplx WKernelTable::operator()(double x) const {
    double lx = std::log(x);
    // e^{-i t_j lx} marches by a fixed rotation since the nodes are uniform
    cplx z = std::polar(1.0, -t_[0] * lx);
    cplx rot = std::polar(1.0, -(t_[1] - t_[0]) * lx);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < k_.size(); ++j) {
        acc += k_[j] * z;
        z *= rot;
    }
    return acc * std::exp(-c_ * lx);
}

AfeResult afe_product(const Discriminant& d, const ShiftPair& shifts, const QuadratureSpec& q) {
    const cplx delta = shifts.delta(), tau = shifts.tau();
    const double qd = static_cast<double>(d.conductor());
    const i64 n_max =
        static_cast<i64>(std::ceil(qd / pi * (std::log(1.0 / q.abs_tol) + 10.0)));

    // contour truncation adapted to the smallest kernel argument
    QuadratureSpec qt = q;
    double lx_min = std::abs(std::log(pi / qd));
    qt.contour_truncation =
        std::max(25.0, 2.0 / pi * (std::log(1.0 / q.abs_tol) + 1.0 * lx_min + 8.0));
    WKernelTable W(delta, tau, qt);

    auto r = r_shift_table(n_max, delta);
    cplx sum = 0.0;
    for (i64 n = 1; n <= n_max; ++n) {
        int ch = d.chi(n);
        if (!ch) continue;
        double xi_arg = static_cast<double>(n) * pi / qd;
        sum += r[static_cast<std::size_t>(n)] / std::sqrt(static_cast<double>(n)) *
               static_cast<double>(ch) * W(xi_arg);
    }
    // tail: |W(x)| <= e^{-x} for x large, divisor growth absorbed in the margin
    double xi_tail = static_cast<double>(n_max + 1) * pi / qd;
    double tail = (qd / pi) * std::pow(static_cast<double>(n_max), 0.7 + std::abs(delta.real())) *
                  std::exp(-xi_tail);
    return {sum, tail, n_max};
}

// ---------- positivity and zero scans ----------

PositivityReport positivity_check(const Discriminant& d, double grid_step, const QuadratureSpec&) {
    if (grid_step <= 0.0 || grid_step > 0.01)
        throw std::invalid_argument("positivity_check: grid_step must lie in (0, 0.01]");
    CompletedL eng(d);
    int count = static_cast<int>(std::floor(1.0 / grid_step)) + 1;
    auto vals = eng.l_on_grid(0.0, grid_step, count);
    // make sure sigma = 1 is sampled even when the step does not divide 1 exactly
    double last_sigma = (count - 1) * grid_step;
    if (last_sigma < 1.0 - 1e-12) {
        vals.push_back(eng.l(1.0));
        ++count;
    }

    PositivityReport rep{};
    rep.positive = true;
    rep.min_value = vals[0];
    rep.min_location = 0.0;
    int min_idx = 0;
    for (int k = 0; k < count; ++k) {
        double sigma = std::min(k * grid_step, 1.0);
        if (vals[static_cast<std::size_t>(k)] < rep.min_value) {
            rep.min_value = vals[static_cast<std::size_t>(k)];
            rep.min_location = sigma;
            min_idx = k;
        }
        if (k > 0 && vals[static_cast<std::size_t>(k)] * vals[static_cast<std::size_t>(k - 1)] < 0.0) {
            rep.positive = false;
            rep.bracket_lo = (k - 1) * grid_step;
            rep.bracket_hi = sigma;
        }
    }
    // local parabolic refinement of the minimum inside [min_idx-1, min_idx+1]
    double lo = std::max(0.0, (min_idx - 1) * grid_step);
    double hi = std::min(1.0, (min_idx + 1) * grid_step);
    double a = lo, b = hi;
    for (int it = 0; it < 40; ++it) {
        double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (eng.l(m1) < eng.l(m2)) b = m2; else a = m1;
    }
    double sigma_ref = 0.5 * (a + b);
    double v_ref = eng.l(sigma_ref);
    if (v_ref < rep.min_value) {
        rep.min_value = v_ref;
        rep.min_location = sigma_ref;
    }
    if (rep.min_value < 0.0 && rep.positive) {
        rep.positive = false;
        rep.bracket_lo = lo;
        rep.bracket_hi = hi;
    }
    return rep;
}

ZeroList scan_zeros(const Discriminant& d, double t_max, double resolution) {
    double res_max = 0.01 / std::log(static_cast<double>(d.conductor()));
    if (resolution > res_max + 1e-15)
        throw std::invalid_argument("scan_zeros: resolution must be <= 0.01/log(8d)");
    CompletedL eng(d);
    int count = static_cast<int>(std::ceil(t_max / resolution)) + 1;
    auto vals = eng.xi_critical_grid(0.0, resolution, count);

    auto xi_at = [&](double t) { return eng.xi(cplx(0.5, t)).real(); };

    ZeroList zl{d.d, resolution, {}};
    for (int k = 1; k < count; ++k) {
        if (vals[static_cast<std::size_t>(k - 1)] * vals[static_cast<std::size_t>(k)] < 0.0) {
            double a = (k - 1) * resolution, b = k * resolution;
            double fa = vals[static_cast<std::size_t>(k - 1)];
            while (b - a > 1e-8) {
                double m = 0.5 * (a + b);
                double fm = xi_at(m);
                if (fa * fm <= 0.0) {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            zl.ordinates.push_back(0.5 * (a + b));
        }
    }
    return zl;
}

double low_zero_statistic(const ZeroList& zeros, double S, double logX) {
    // gamma and -gamma both lie in the window, each contributing cos/2
    double acc = 0.0;
    for (double g : zeros.ordinates) {
        double x = g * logX;
        if (std::abs(x) <= S) acc += std::cos(pi * x / (2.0 * S));
    }
    return acc;
}

}  // namespace qdl
