#include "qdl/theory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "qdl/special.hpp"

namespace qdl {

namespace {

using std::numbers::pi;

double sinhc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 + x * x / 6.0 * (1.0 + x * x / 20.0);
    return std::sinh(x) / x;
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0 * (1.0 - x * x / 20.0);
    return std::sin(x) / x;
}

cplx sinhc(cplx z) {
    if (std::abs(z) < 1e-4) return 1.0 + z * z / 6.0 * (1.0 + z * z / 20.0);
    return std::sinh(z) / z;
}

// zeta(1+x) as pole + entire part; stable arbitrarily close to x = 0
cplx zeta_near1(cplx x) { return 1.0 / x + zeta1p(x); }

}  // namespace

BoundParams::BoundParams() : BoundParams(6.8, 0.64, MollifierShape::hermite_cubic(0.64)) {}

BoundParams::BoundParams(double R_, double b_, Polynomial P_, double rho_,
                         std::optional<double> S_)
    : R(R_), b(b_), S(S_ ? *S_ : pi / (2.0 * (1.0 - b_))), P(std::move(P_)), rho(rho_) {
    if (R <= 0.0 || S <= 0.0 || b <= 0.0 || b >= 1.0 || rho <= 0.0)
        throw std::invalid_argument("BoundParams: R, S, rho must be positive and b in (0,1)");
    // endpoint constraints as in the mollifier shape
    MollifierShape check(2.0, b, P);
    Pp_ = P.derivative();
    Ppp_ = Pp_.derivative();
}

double v_func(double u, double v, const BoundParams& p, const QuadratureSpec& q) {
    const double rho = p.rho;
    if (u * u + v * v < 1e-12) {
        auto f = [&](double x) { return p.Qpp(x) * p.Qpp(x); };
        return 1.0 + rho / 12.0 * integrate<double>(f, 0.0, p.b, q);
    }
    const cplx z(u, v);
    auto f = [&](double x) {
        return std::exp(-2.0 * u * (1.0 - x) / rho) *
               std::norm(p.Qp(x) + p.Qpp(x) * rho / (2.0 * z));
    };
    double I = integrate<double>(f, 0.0, p.b, q);
    return 1.0 + rho * std::exp(-u) * (sinhc(u) - sinc(v)) * I;
}

JIntegrals j_integrals(const BoundParams& p, const QuadratureSpec& q, double u_max) {
    const double S = p.S;
    QuadratureSpec qv(std::min(1e-11, q.abs_tol), std::min(1e-11, q.rel_tol), q.max_depth);
    auto f1 = [&](double t) { return std::cos(pi * t / (2.0 * S)) * std::log(v_func(-p.R, t, p, qv)); };
    double J1 = integrate<double>(f1, 0.0, S, q);

    auto f2 = [&](double u) {
        return std::sinh(pi * u / (2.0 * S)) * std::log(v_func(u - p.R, S, p, qv));
    };
    double J2 = integrate<double>(f2, 0.0, 0.25 * u_max, q) +
                integrate<double>(f2, 0.25 * u_max, u_max, q);
    // integrand decays like u^{-4}; bound the tail by f(u_max) * u_max / 3
    double tail = std::abs(f2(u_max)) * u_max / 3.0;
    return {J1, J2, tail};
}

double bound_constant(const BoundParams& p, const QuadratureSpec& q) {
    JIntegrals j = j_integrals(p, q);
    double threshold = 8.0 * p.S * std::sinh(pi * p.R / (2.0 * p.S));
    return (j.J1 + j.J2) / threshold;
}

std::vector<ScanRow> param_scan(const std::vector<double>& R_grid,
                                const std::vector<double>& b_grid, const PolyFamilySpec& family,
                                const QuadratureSpec& q) {
    if (R_grid.empty() || b_grid.empty() || family.corrections.empty())
        throw std::invalid_argument("param_scan: grids must be non-empty");

    auto build_poly = [](double b, const std::vector<double>& corr) {
        Polynomial P = MollifierShape::hermite_cubic(b);
        // (x/b)^{2+j} (1 - x/b)^2 expands to powers 2+j, 3+j, 4+j
        std::size_t maxdeg = corr.empty() ? 3 : 4 + corr.size() - 1;
        P.c.resize(std::max<std::size_t>(P.c.size(), maxdeg + 1), 0.0);
        for (std::size_t j = 0; j < corr.size(); ++j) {
            double cj = corr[j];
            if (cj == 0.0) continue;
            double scale = cj / std::pow(b, 2.0 + j);
            P.c[2 + j] += scale;
            P.c[3 + j] += scale * (-2.0 / b);
            P.c[4 + j] += scale / (b * b);
        }
        return P;
    };

    std::vector<ScanRow> rows;
    bool have_pinned = false;
    for (double R : R_grid)
        for (double b : b_grid)
            for (const auto& corr : family.corrections) {
                Polynomial P = build_poly(b, corr);
                BoundParams params(R, b, P);
                double c = bound_constant(params, q);
                bool pinned = std::abs(R - 6.8) < 1e-12 && std::abs(b - 0.64) < 1e-12 &&
                              corr.empty();
                have_pinned = have_pinned || pinned;
                rows.push_back({R, b, corr, c, pinned});
            }
    if (!have_pinned) {
        BoundParams ref;
        rows.push_back({6.8, 0.64, {}, bound_constant(ref, q), true});
    }
    std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) { return a.c < b.c; });
    return rows;
}

double ks_density_integral(double S, const QuadratureSpec& q) {
    if (S <= 0.0) throw std::invalid_argument("ks_density_integral: S must be positive");
    auto f = [&](double x) {
        return std::cos(pi * pi * x / S) * (1.0 - sinc(2.0 * pi * x));
    };
    return integrate<double>(f, 0.0, S / (2.0 * pi), q);
}

// ---------- main terms from the four-term Euler-product expression ----------

namespace {

// local-factor correction turning eta_a(s; 1) into eta_a(s; l)
cplx eta_l_correction(i64 l, cplx s, cplx a) {
    if (l == 1) return 1.0;
    cplx corr = 1.0;
    for (auto [p, e] : factorize(l)) {
        int lcase = (e % 2 == 1) ? 1 : 2;
        corr *= eta_local_factor(p, s, a, lcase) / eta_local_factor(p, s, a, 0);
    }
    return corr;
}

// One symmetric pair sum_{mu=+-} F(mu w0) with F(w) = zeta(1+2w) G(w),
// written as zeta1p(2w0) G(w0) + zeta1p(-2w0) G(-w0) + (G(w0)-G(-w0))/(2 w0);
// the difference quotient switches to a stencil derivative for small |w0|.
// G is supplied through its values at the required points.
struct PairEvaluator {
    cplx w0;
    bool stencil;  // |w0| below the crossover radius
    double h;
    std::vector<cplx> points;  // evaluation points for G

    // sing_dist: distance from w = 0 to the nearest pole of G, so the stencil
    // stays inside G's disc of analyticity
    PairEvaluator(cplx w0_, double sing_dist)
        : w0(w0_), stencil(std::abs(w0_) < 1e-3), h(std::min(2e-3, sing_dist / 6.0)) {
        if (stencil)
            points = {cplx(h), cplx(-h), cplx(2 * h), cplx(-2 * h)};
        else
            points = {w0, -w0};
    }

    cplx combine(const std::vector<cplx>& g) const {
        if (!stencil) {
            return zeta1p(2.0 * w0) * g[0] + zeta1p(-2.0 * w0) * g[1] +
                   (g[0] - g[1]) / (2.0 * w0);
        }
        // Taylor data of G at 0 from the symmetric 4-point stencil
        cplx A = g[0] + g[1], B = g[2] + g[3];
        cplx g0 = (4.0 * A - B) / 6.0;
        cplx g1 = (8.0 * (g[0] - g[1]) - (g[2] - g[3])) / (12.0 * h);
        cplx g2 = (16.0 * A - B - 30.0 * g0) / (12.0 * h * h);
        cplx g3 = (g[2] - 2.0 * g[0] + 2.0 * g[1] - g[3]) / (2.0 * h * h * h);
        cplx even = g0 + 0.5 * w0 * w0 * g2;
        cplx odd = w0 * g1 + w0 * w0 * w0 * g3 / 6.0;
        // F(w0)+F(-w0) with F(w) = zeta(1+2w) G(w); the pole parts collapse to
        // the odd difference quotient G'(0) + w0^2 G'''(0)/6 + O(w0^4)
        return zeta1p(2.0 * w0) * (even + odd) + zeta1p(-2.0 * w0) * (even - odd) + g1 +
               w0 * w0 * g3 / 6.0;
    }
};

// Everything fixed about one family of main terms: the pair variable w0
// (tau for the Gamma_delta family, delta for the Gamma_tau family), the other
// shift a (the eta subscript and the Z offset), and per-point base values
//   base(w) = Gamma_a(w) (8X/pi)^w PsiCheck(w) zeta(1+2w-2a) zeta(1+2w+2a) eta_a(1+2w; 1).
struct MainTermFamily {
    cplx a;
    PairEvaluator pair;
    std::vector<cplx> base;       // base value at each pair point
    std::vector<cplx> s_at;       // 1+2w at each point (for the l-corrections)

    template <class PsiCheck>
    MainTermFamily(cplx w0, cplx a_, double lnA, PsiCheck&& psi_check, double eta_tol)
        : a(a_), pair(w0, std::abs(a_) > 1e-12 ? std::abs(a_) : 1.0) {
        for (cplx w : pair.points) {
            cplx s = 1.0 + 2.0 * w;
            cplx val = gamma_delta(w, a) * std::exp(w * lnA) * psi_check(w) *
                       zeta_near1(2.0 * (w - a)) * zeta_near1(2.0 * (w + a)) *
                       eta(a, s, 1, eta_tol).value;
            base.push_back(val);
            s_at.push_back(s);
        }
    }

    // sum_{mu=+-} of the family's main terms for modulus l with square-free part l1
    cplx eval(i64 l, i64 l1, cplx r_l1) const {
        std::vector<cplx> g(pair.points.size());
        double lnl1 = std::log(static_cast<double>(l1));
        for (std::size_t i = 0; i < pair.points.size(); ++i)
            g[i] = base[i] * r_l1 * std::exp(-pair.points[i] * lnl1) *
                   eta_l_correction(l, s_at[i], a);
        return pair.combine(g);
    }
};

i64 squarefree_part(i64 l) {
    i64 l1 = 1;
    for (auto [p, e] : factorize(l))
        if (e % 2 == 1) l1 *= p;
    return l1;
}

}  // namespace

cplx prop23_main_term(i64 l, const ShiftPair& shifts, double X, const SmoothWeight& psi,
                      const QuadratureSpec& q) {
    if (l < 1 || l % 2 == 0) throw std::invalid_argument("prop23_main_term: l must be odd positive");
    const cplx tau = shifts.tau(), delta = shifts.delta();
    double dist = std::min(std::min(std::abs(tau), std::abs(delta)),
                           std::min(std::abs(tau - delta), std::abs(tau + delta)));
    if (dist < 1e-3)
        throw std::domain_error(
            "prop23_main_term: shifts within " + std::to_string(dist) +
            " of the singular set {tau=0, delta=0, tau=+-delta}");

    const double lnA = std::log(8.0 * X / pi);
    const double eta_tol = std::min(1e-10, q.abs_tol);
    auto psi_check = [&](cplx w) { return mellin_weight(w, psi, q); };

    i64 l1 = squarefree_part(l);
    cplx zA = 0.0;
    for (int mu : {1, -1}) {
        cplx w = static_cast<double>(mu) * tau;
        zA += r_shift(l1, delta) * gamma_delta(w, delta) *
              std::exp(w * (lnA - std::log(static_cast<double>(l1)))) * psi_check(w) *
              zeta_near1(2.0 * (w - delta)) * zeta_near1(2.0 * (w + delta)) * zeta_near1(2.0 * w) *
              eta(delta, 1.0 + 2.0 * w, l, eta_tol).value;
        cplx wd = static_cast<double>(mu) * delta;
        zA += r_shift(l1, tau) * gamma_delta(wd, tau) *
              std::exp(wd * (lnA - std::log(static_cast<double>(l1)))) * psi_check(wd) *
              zeta_near1(2.0 * (wd - tau)) * zeta_near1(2.0 * (wd + tau)) * zeta_near1(2.0 * wd) *
              eta(tau, 1.0 + 2.0 * wd, l, eta_tol).value;
    }
    const double zeta2 = pi * pi / 6.0;
    return zA * 2.0 / (3.0 * zeta2 * std::sqrt(static_cast<double>(l1)));
}

double moment_main_term(const ShiftPair& shifts, double X, const MollifierShape& shape,
                        const SmoothWeight& phi, const QuadratureSpec& q, double eps) {
    const cplx d1 = shifts.delta1, d2 = shifts.delta2;
    if (std::abs(d2 - std::conj(d1)) > 1e-14)
        throw std::invalid_argument("moment_main_term: requires delta2 = conj(delta1)");
    const double logX = std::log(X);
    const cplx tau = shifts.tau(), delta = shifts.delta();  // tau real, delta imaginary here
    if (std::abs(d1) < eps / logX || d1.real() < -1.0 / (eps * logX) || d1.real() > 0.25 + 1e-12)
        throw std::domain_error("moment_main_term: delta1 outside the shifted-moment regime");

    const i64 Mi = static_cast<i64>(std::floor(shape.length));
    if (Mi > 4000)
        throw std::length_error("moment_main_term: mollifier length beyond the pair-sum budget");
    SquarefreeSieve sieve(std::max<i64>(Mi, 3));
    LambdaTable table(shape, sieve);

    const double lnA = std::log(8.0 * X / pi);
    const double eta_tol = std::min(1e-10, q.abs_tol);
    // Psi(t) = Phi(t) t^{-tau}, so PsiCheck(w) = PhiCheck(w - tau)
    std::map<std::pair<double, double>, cplx> mellin_cache;
    auto psi_check = [&](cplx w) {
        cplx arg = w - tau;
        auto key = std::make_pair(arg.real(), arg.imag());
        auto it = mellin_cache.find(key);
        if (it != mellin_cache.end()) return it->second;
        cplx v = mellin_weight(arg, phi, q);
        mellin_cache.emplace(key, v);
        return v;
    };

    MainTermFamily famA(tau, delta, lnA, psi_check, eta_tol);
    MainTermFamily famB(delta, tau, lnA, psi_check, eta_tol);

    // cache M(l) over the pair products l = m1 m2 (many repeats)
    std::map<i64, cplx> ml_cache;
    auto main_l = [&](i64 l) {
        auto it = ml_cache.find(l);
        if (it != ml_cache.end()) return it->second;
        i64 l1 = squarefree_part(l);
        cplx rA = r_shift(l1, delta), rB = r_shift(l1, tau);
        const double zeta2 = pi * pi / 6.0;
        cplx v = (famA.eval(l, l1, rA) + famB.eval(l, l1, rB)) * 2.0 /
                 (3.0 * zeta2 * std::sqrt(static_cast<double>(l1)));
        ml_cache.emplace(l, v);
        return v;
    };

    cplx acc = 0.0;
    const auto& sup = table.support();
    for (auto [m1, lam1] : sup) {
        cplx w1 = lam1 * pow_negs(std::log(static_cast<double>(m1)), 0.5 + d1);
        for (auto [m2, lam2] : sup) {
            cplx w2 = pow_negs(std::log(static_cast<double>(m2)), 0.5 + d2);
            acc += w1 * lam2 * w2 * main_l(m1 * m2);
        }
    }

    const double zeta2 = pi * pi / 6.0;
    cplx norm = std::exp(tau * lnA) * gamma_delta(tau, delta) * (2.0 / (3.0 * zeta2)) *
                mellin_weight(0.0, phi, q);
    cplx w = acc / norm;
    return w.real();
}

double moment_main_term_asymptotic(const ShiftPair& shifts, double X, const MollifierShape& shape,
                                   const QuadratureSpec& q, double eps) {
    const cplx d1 = shifts.delta1, d2 = shifts.delta2;
    if (std::abs(d2 - std::conj(d1)) > 1e-14)
        throw std::invalid_argument("moment_main_term_asymptotic: requires delta2 = conj(delta1)");
    const double logX = std::log(X);
    if (std::abs(d1) < eps / logX || d1.real() < -1.0 / (eps * logX) || d1.real() > 0.25 + 1e-12)
        throw std::domain_error("moment_main_term_asymptotic: delta1 outside the regime");

    const double logM = std::log(shape.length);
    const double lnA = std::log(8.0 * X / pi);
    const double tau = d1.real();
    const cplx delta(0.0, d1.imag());

    cplx bracket = (lnA / logM) * std::exp(-tau * lnA) *
                   (sinhc(cplx(tau * lnA)) - sinhc(delta * lnA));
    auto f = [&](double x) {
        return std::exp(-2.0 * tau * (1.0 - x) * logM) *
               std::norm(shape.Qp(x) + shape.Qpp(x) / (2.0 * d1 * logM));
    };
    double I = integrate<double>(f, 0.0, shape.breakpoint, q);
    return 1.0 + bracket.real() * I;
}

}  // namespace qdl
