#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "qdl/lfun.hpp"
#include "qdl/special.hpp"

using namespace qdl;
using std::numbers::pi;

TEST_CASE("l_value: chi_{-8} against reference and Dirichlet series") {
    Discriminant d1(1);
    for (const auto& f : fixtures::l_chi8_values) {
        cplx got = l_value(cplx(f.sigma), d1);
        CHECK(std::abs(got - cplx(f.val)) < 1e-10);
        CHECK(got.real() > 0.0);
    }
    // truncated Dirichlet series at Re s = 2
    for (i64 dv : {1LL, 3LL, 7LL}) {
        Discriminant d(dv);
        cplx s(2.0, 0.4);
        cplx series = 0.0;
        const i64 N = 300000;
        for (i64 n = 1; n <= N; ++n) {
            int ch = d.chi(n);
            if (ch) series += static_cast<double>(ch) * pow_negs(std::log(static_cast<double>(n)), s);
        }
        CHECK(std::abs(l_value(s, d) - series) < 1e-9 + 2.0 / N);
    }
    // conjugation symmetry
    Discriminant d5(5);
    cplx s(0.7, 1.3);
    CHECK(std::abs(l_value(std::conj(s), d5) - std::conj(l_value(s, d5))) < 1e-11);
}

TEST_CASE("xi: functional equation and reality on the critical line") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> re(-1.0, 2.0), im(-6.0, 6.0);
    for (i64 dv : {1LL, 3LL, 5LL, 7LL, 11LL}) {
        Discriminant d(dv);
        for (int it = 0; it < 6; ++it) {
            cplx s(re(rng), im(rng));
            cplx a = xi_value(s, d), b = xi_value(1.0 - s, d);
            CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
        }
        for (double t : {0.3, 1.7, 4.2}) {
            cplx v = xi_value(cplx(0.5, t), d);
            CHECK(std::abs(v.imag()) < 1e-10 * std::max(1.0, std::abs(v)));
        }
        CHECK(xi_value(cplx(0.5), d).real() > 0.0);
    }
}

TEST_CASE("theta engine agrees with the Hurwitz route") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> re(-0.5, 2.5), im(-8.0, 8.0);
    for (i64 dv : {1LL, 13LL, 105LL, 2021LL}) {
        Discriminant d(dv);
        CompletedL eng(d);
        for (int it = 0; it < 5; ++it) {
            cplx s(re(rng), im(rng));
            cplx a = eng.l(s), b = l_value(s, d);
            CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(b)));
        }
        CHECK(std::abs(eng.l(0.5) - l_value(cplx(0.5), d).real()) < 1e-11);
        // grid recurrence against direct evaluation
        auto grid = eng.l_on_grid(0.0, 0.01, 101);
        CHECK(std::abs(grid[0] - eng.l(0.0)) < 1e-11);
        CHECK(std::abs(grid[50] - eng.l(0.5)) < 1e-10);
        CHECK(std::abs(grid[100] - eng.l(1.0)) < 1e-10);
        // critical grid against xi_value
        auto cg = eng.xi_critical_grid(0.0, 0.5, 5);
        for (int k = 0; k < 5; ++k) {
            cplx want = xi_value(cplx(0.5, 0.5 * k), d);
            CHECK(std::abs(cg[static_cast<std::size_t>(k)] - want.real()) <
                  1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("w_kernel: contour independence and both asymptotic regimes") {
    QuadratureSpec q(1e-12, 1e-12);
    cplx delta(0.05), tau(0.1);

    for (double x : {0.5, 2.0, 10.0}) {
        cplx a = w_kernel(x, delta, tau, q, 0.5);
        cplx b = w_kernel(x, delta, tau, q, 1.0);
        CHECK(std::abs(a - b) < 1e-10);
    }

    // small-x: W = Gamma_delta(tau) x^{-tau} + Gamma_delta(-tau) x^{tau} + O(x^{1-eps})
    auto resid = [&](double x) {
        cplx w = w_kernel(x, delta, tau, q);
        cplx main = gamma_delta(tau, delta) * std::pow(x, -tau.real()) +
                    gamma_delta(-tau, delta) * std::pow(x, tau.real());
        return std::abs(w - main);
    };
    double r3 = resid(1e-3), r4 = resid(1e-4);
    CHECK(r3 < 10.0 * std::pow(1e-3, 0.9));
    CHECK(r4 < 10.0 * std::pow(1e-4, 0.9));
    double measured_exp = std::log10(r3 / r4);
    CHECK(measured_exp > 0.45);  // within a factor 2 of the predicted 0.9
    CHECK(measured_exp < 1.8);

    // large-x exponential decay
    for (double x : {20.0, 40.0}) {
        QuadratureSpec qx(1e-22, 1e-10, 24);
        CHECK(std::abs(w_kernel(x, delta, tau, qx)) <= std::exp(-x));
    }

    // table evaluator matches the adaptive one
    WKernelTable tab(delta, tau, q);
    for (double x : {1e-3, 0.3, 1.0, 4.0, 15.0})
        CHECK(std::abs(tab(x) - w_kernel(x, delta, tau, q)) < 1e-10);
}

TEST_CASE("afe identity: flagship cross-check on small cases") {
    QuadratureSpec q(1e-10, 1e-10);
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ur(-0.12, 0.12), ui(0.02, 0.3);
    std::vector<i64> ds = {1, 3, 5, 17};
    for (i64 dv : ds) {
        Discriminant d(dv);
        cplx d1(ur(rng), ui(rng));
        ShiftPair sh = ShiftPair::conjugate_pair(d1);
        auto afe = afe_product(d, sh, q);
        cplx xx = xi_value(0.5 + sh.delta1, d) * xi_value(0.5 + sh.delta2, d);
        CHECK(std::abs(afe.value - xx) <= 1e-8 * (1.0 + std::abs(xx)));
        CHECK(afe.tail_bound < 1e-8);
        // swap symmetry
        ShiftPair swapped(sh.delta2, sh.delta1);
        auto afe2 = afe_product(d, swapped, q);
        CHECK(std::abs(afe2.value - afe.value) < 1e-9 * (1.0 + std::abs(afe.value)));
    }
}

TEST_CASE("positivity check: small discriminants are positive") {
    QuadratureSpec q;
    for (i64 dv : {1LL, 3LL, 5LL, 7LL}) {
        Discriminant d(dv);
        auto rep = positivity_check(d, 0.005, q);
        CHECK(rep.positive);
        CHECK(rep.min_value > 0.0);
        CHECK(rep.min_location >= 0.0);
        CHECK(rep.min_location <= 1.0);
    }
}

TEST_CASE("scan_zeros: ordering, stability under refinement, statistic") {
    Discriminant d(1);
    double res = 0.008 / std::log(8.0);
    auto zl = scan_zeros(d, 15.0, res);
    CHECK(zl.ordinates.size() >= 2);
    for (std::size_t i = 1; i < zl.ordinates.size(); ++i)
        CHECK(zl.ordinates[i] > zl.ordinates[i - 1]);
    // smallest ordinate stable under resolution halving
    auto zl2 = scan_zeros(d, 15.0, res / 2.0);
    REQUIRE(!zl2.ordinates.empty());
    CHECK(std::abs(zl.ordinates[0] - zl2.ordinates[0]) < 1e-6);
    // zeros really are zeros of xi
    CompletedL eng(d);
    for (double g : zl.ordinates)
        CHECK(std::abs(eng.xi(cplx(0.5, g))) < 1e-6);

    // statistic: empty window and endpoint kernel
    ZeroList none{1, res, {}};
    CHECK(low_zero_statistic(none, 3.0, 10.0) == 0.0);
    ZeroList one{1, res, {0.3}};
    CHECK(std::abs(low_zero_statistic(one, 3.0, 10.0) - std::cos(pi * 3.0 / (2.0 * 3.0))) < 1e-14);
    CHECK(std::abs(low_zero_statistic(one, 0.3 * 10.0, 10.0)) < 1e-12);  // cos(pi/2)
}

TEST_CASE("shift pair invariants") {
    CHECK_THROWS_AS(ShiftPair(cplx(0.3, 0.0), cplx(0.3, 0.0)), std::invalid_argument);
    ShiftPair sh = ShiftPair::conjugate_pair(cplx(0.1, 0.2));
    CHECK(std::abs(sh.tau().imag()) < 1e-15);
    CHECK(std::abs(sh.delta().real()) < 1e-15);
    CHECK(sh.kappa() == doctest::Approx(0.1));
}
