#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "qdl/quadrature.hpp"
#include "qdl/smooth_weight.hpp"
#include "qdl/special.hpp"

using namespace qdl;

namespace {
double rel_err(cplx got, cplx want) {
    double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}
}  // namespace

TEST_CASE("gamma: pinned and high-precision fixture values") {
    CHECK(rel_err(gamma(cplx(1.0)), cplx(1.0)) < 1e-14);
    CHECK(rel_err(gamma(cplx(0.5)), cplx(std::sqrt(M_PI))) < 1e-14);
    for (const auto& f : fixtures::gamma_values)
        CHECK(rel_err(gamma(f.z), f.val) < 1e-13);
    // Gamma(3/4)^2 against the reference value
    cplx g34 = gamma(cplx(0.75));
    CHECK(rel_err(g34 * g34, fixtures::gamma_values[0].val * fixtures::gamma_values[0].val) < 1e-13);
}

TEST_CASE("gamma: recurrence and pole") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> re(-8.0, 40.0), im(-150.0, 150.0);
    for (int it = 0; it < 200; ++it) {
        cplx s(re(rng), im(rng));
        if (std::abs(s.imag()) < 0.5 && s.real() < 0.5) continue;  // dodge poles
        CHECK(rel_err(gamma(s + 1.0), s * gamma(s)) < 1e-12);
    }
    CHECK_THROWS_AS(gamma(cplx(0.0)), std::domain_error);
    CHECK_THROWS_AS(gamma(cplx(-3.0)), std::domain_error);
}

TEST_CASE("zeta: fixtures, pole, trivial values") {
    CHECK(rel_err(zeta(cplx(2.0)), cplx(M_PI * M_PI / 6.0)) < 1e-13);
    CHECK(rel_err(zeta(cplx(0.0)), cplx(-0.5)) < 1e-13);
    for (const auto& f : fixtures::zeta_values)
        CHECK(rel_err(zeta(f.z), f.val) < 1e-12);
    CHECK_THROWS_AS(zeta(cplx(1.0)), std::domain_error);
}

TEST_CASE("hurwitz zeta: fixtures and specialization at a=1") {
    for (const auto& f : fixtures::hurwitz_values)
        CHECK(rel_err(hurwitz_zeta(f.s, f.a), f.val) < 1e-12);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> re(-4.0, 8.0), im(-100.0, 100.0);
    for (int it = 0; it < 60; ++it) {
        cplx s(re(rng), im(rng));
        if (std::abs(s - cplx(1.0)) < 0.1) continue;
        CHECK(rel_err(hurwitz_zeta(s, 1.0), zeta(s)) < 1e-11);
    }
}

TEST_CASE("zeta: functional-equation sanity") {
    // independent algebraic route: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> re(-4.0, 0.4), im(-40.0, 40.0);
    for (int it = 0; it < 50; ++it) {
        cplx s(re(rng), im(rng));
        cplx lhs = zeta(s);
        cplx rhs = std::pow(cplx(2.0), s) * std::pow(cplx(M_PI), s - 1.0) *
                   std::sin(0.5 * M_PI * s) * gamma(1.0 - s) * zeta(1.0 - s);
        CHECK(rel_err(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("zeta1p matches zeta near and away from the pole") {
    for (cplx x : {cplx(0.5, 0.2), cplx(-0.3, 0.0), cplx(1e-4, 1e-5), cplx(0.0, 1e-6)}) {
        cplx direct = (std::abs(x) > 1e-3) ? zeta(1.0 + x) - 1.0 / x : cplx(0.0);
        if (std::abs(x) > 1e-3) CHECK(std::abs(zeta1p(x) - direct) < 1e-10);
    }
    CHECK(std::abs(zeta1p(cplx(0.0)) - cplx(euler_gamma)) < 1e-15);
}

TEST_CASE("gamma_delta: symmetry and reference value") {
    cplx v = gamma_delta(cplx(0.5), cplx(0.0));
    CHECK(rel_err(v, cplx(1.0)) < 1e-13);  // Gamma(1)^2
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    for (int it = 0; it < 50; ++it) {
        cplx s(u(rng), u(rng)), d(u(rng), u(rng));
        CHECK(rel_err(gamma_delta(s, d), gamma_delta(s, -d)) < 1e-13);
    }
    // Gamma_{0.1}(0.3) = Gamma(0.95) Gamma(0.85) from the fixture table
    cplx want = fixtures::gamma_values[10].val * fixtures::gamma_values[11].val;
    CHECK(rel_err(gamma_delta(cplx(0.3), cplx(0.1)), want) < 1e-13);
}

TEST_CASE("big_z: specialization and evenness") {
    CHECK(rel_err(big_z(cplx(3.0), cplx(0.0)), std::pow(zeta(cplx(3.0)), 3)) < 1e-12);
    cplx want = zeta(cplx(2.5)) * zeta(cplx(3.0)) * zeta(cplx(3.5));
    CHECK(rel_err(big_z(cplx(3.0), cplx(0.25)), want) < 1e-12);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    for (int it = 0; it < 30; ++it) {
        cplx s(2.0 + u(rng), u(rng)), w(u(rng), u(rng));
        CHECK(rel_err(big_z(s, w), big_z(s, -w)) < 1e-12);
    }
}

TEST_CASE("smooth weight: plateau, support, derivative norms") {
    SmoothWeight phi(0.05);
    CHECK(phi(0.9) == 0.0);
    CHECK(phi(2.1) == 0.0);
    CHECK(phi(1.5) == 1.0);
    CHECK(phi(1.02) > 0.0);
    CHECK(phi(1.02) < 1.0);
    for (double t : {1.01, 1.03, 1.97, 2.0, 1.0, 1.5})
        CHECK(phi(t) >= 0.0);
    // int |Phi'| = 2 exactly (monotone up then down)
    CHECK(std::abs(phi.norm(1) - 2.0) < 1e-8);
    CHECK(phi.norm(2) > phi.norm(1));
    CHECK(phi.norm(0) > 0.9);

    // smoothstep derivatives against central differences
    for (double t : {1.012, 1.027, 1.041, 1.962, 1.988}) {
        double h = 1e-5;
        double d1 = (phi(t + h) - phi(t - h)) / (2 * h);
        CHECK(std::abs(d1 - phi.deriv(1, t)) < 1e-5 * std::max(1.0, std::abs(phi.deriv(1, t))));
        double d2 = (phi.deriv(1, t + h) - phi.deriv(1, t - h)) / (2 * h);
        CHECK(std::abs(d2 - phi.deriv(2, t)) < 1e-4 * std::max(1.0, std::abs(phi.deriv(2, t))));
        double d3 = (phi.deriv(2, t + h) - phi.deriv(2, t - h)) / (2 * h);
        CHECK(std::abs(d3 - phi.deriv(3, t)) < 1e-3 * std::max(1.0, std::abs(phi.deriv(3, t))));
    }
}

TEST_CASE("mellin weight: mass, decay bound, integration by parts") {
    QuadratureSpec q(1e-12, 1e-12);
    SmoothWeight phi(0.02);
    // mass close to 1 for a thin-ramp plateau
    CHECK(std::abs(mellin_weight(cplx(0.0), phi, q).real() - 1.0) < 0.03);
    // mean-value bracket for PhiCheck(1)
    double m0 = mellin_weight(cplx(0.0), phi, q).real();
    double m1 = mellin_weight(cplx(1.0), phi, q).real();
    CHECK(m1 > 1.0 * m0 * 0.99);
    CHECK(m1 < 2.0 * m0 * 1.01);

    SmoothWeight ph(0.05);
    double p2 = ph.norm(2);
    for (double T : {5.0, 10.0, 20.0}) {
        cplx v = mellin_weight(cplx(0.0, T), ph, q);
        CHECK(std::abs(v) <= 2.0 * p2 / std::norm(cplx(1.0, T)) * 1.0001);
    }
    // integration by parts: PhiCheck(w) = int Phi^{(nu)}(y) y^{w+nu} / ((w+1)...(w+nu))
    for (cplx w : {cplx(0.3, 0.7), cplx(-0.2, 2.0)}) {
        cplx direct = mellin_weight(w, ph, q);
        for (int nu : {1, 2}) {
            auto f = [&](double y) {
                return ph.deriv(nu, y) * std::exp((w + static_cast<double>(nu)) * std::log(y));
            };
            cplx num = integrate<cplx>(f, 1.0, 1.0 + ph.eps(), q) +
                       integrate<cplx>(f, 2.0 - ph.eps(), 2.0, q);
            cplx den = 1.0;
            for (int j = 1; j <= nu; ++j) den *= (w + static_cast<double>(j));
            CHECK(std::abs(direct - num / den * ((nu % 2) ? -1.0 : 1.0)) < 1e-9);
        }
    }
}

TEST_CASE("eta: partial-product oracle at l=1 and local-factor cases") {
    QuadratureSpec q;
    cplx w(0.0, 0.12), s(1.1, 0.0);
    auto res = eta(w, s, 1, 1e-10);
    // direct partial product over p <= 10^6
    const auto& primes = odd_primes_upto(1000000);
    cplx l2 = std::log(2.0);
    cplx e2 = (1.0 - std::exp((-s - 2.0 * w) * l2)) * (1.0 - std::exp(-s * l2)) *
              (1.0 - std::exp((-s + 2.0 * w) * l2));
    cplx prod = e2;
    for (i64 p : primes) prod *= eta_local_factor(p, s, w, 0);
    CHECK(std::abs(res.value - prod) < res.tail_bound + 1e-8);

    // p | l1 and p | l, p not dividing l1 factors
    for (i64 p : {3LL, 7LL, 11LL}) {
        double lp = std::log(static_cast<double>(p));
        cplx ps = std::exp(-s * lp);
        cplx f1 = eta_local_factor(p, s, w, 1);
        CHECK(std::abs(f1 - static_cast<double>(p) / (p + 1.0) * (1.0 - ps)) < 1e-14);
        cplx f2 = eta_local_factor(p, s, w, 2);
        CHECK(std::abs(f2 - static_cast<double>(p) / (p + 1.0) * (1.0 - ps * ps)) < 1e-14);
    }

    // evenness in w of the generic factor and of the full product
    auto rp = eta(-w, s, 1, 1e-10);
    CHECK(std::abs(res.value - rp.value) < 1e-10);
    CHECK(std::abs(eta_local_factor(13, s, w, 0) - eta_local_factor(13, s, -w, 0)) < 1e-15);

    // composite modulus: quotient structure against the definition
    auto r15 = eta(w, s, 15, 1e-10);
    cplx expect = res.value;
    for (i64 p : {3LL, 5LL})
        expect *= eta_local_factor(p, s, w, 1) / eta_local_factor(p, s, w, 0);
    CHECK(std::abs(r15.value - expect) < 1e-10);

    auto r9 = eta(w, s, 9, 1e-10);
    cplx expect9 = res.value * eta_local_factor(3, s, w, 2) / eta_local_factor(3, s, w, 0);
    CHECK(std::abs(r9.value - expect9) < 1e-10);
}

TEST_CASE("quadrature: smoke") {
    QuadratureSpec q(1e-12, 1e-12);
    double v = integrate<double>([](double x) { return std::sin(x); }, 0.0, M_PI, q);
    CHECK(std::abs(v - 2.0) < 1e-12);
    cplx vc = integrate<cplx>([](double x) { return std::exp(cplx(0.0, x)); }, 0.0, 1.0, q);
    CHECK(std::abs(vc - cplx(std::sin(1.0), 1.0 - std::cos(1.0))) < 1e-12);
    // error reporting on a nasty integrand
    QuadratureSpec tight(1e-15, 1e-15, 3);
    CHECK_THROWS_AS(
        integrate<double>([](double x) { return std::sqrt(std::abs(x - 0.3337)); }, 0.0, 1.0, tight),
        QuadratureError);
}
