// Evaluation of L(s, chi_{-8d}) and the completed function
//
//   xi(s) = (8d/pi)^{s/2 - 1/4} Gamma(s/2 + 1/2) L(s, chi_{-8d}),   xi(s) = xi(1-s),
//
// the shifted kernel W_{delta,tau}(x) of the approximate functional equation,
// the two-sided identity  xi(1/2+d1) xi(1/2+d2) = A_{delta,tau}(d), real-axis
// positivity scans and critical-line zero scans.
//
// Two evaluation engines:
//  * l_value: conductor-length Hurwitz-zeta combination (reference route);
//  * CompletedL: theta-integral engine Lambda(s) = int_1^inf theta(t)
//    (t^{(s+1)/2} + t^{(2-s)/2}) dt/t with theta(t) = sum_n n chi(n) e^{-pi n^2 t/q},
//    one-time setup per discriminant, then fast at many points (used by the
//    batch scans; cross-validated against l_value in the tests).

#pragma once

#include <optional>
#include <vector>

#include "qdl/arith.hpp"
#include "qdl/quadrature.hpp"

namespace qdl {

struct ShiftPair {
    cplx delta1, delta2;

    ShiftPair(cplx d1, cplx d2) : delta1(d1), delta2(d2) {
        if (kappa() > 0.25 + 1e-12)
            throw std::invalid_argument("ShiftPair: requires kappa = max(|Re delta|,|Re tau|) <= 1/4");
    }
    cplx tau() const { return 0.5 * (delta1 + delta2); }
    cplx delta() const { return 0.5 * (delta1 - delta2); }
    double kappa() const {
        return std::max(std::abs(delta().real()), std::abs(tau().real()));
    }
    static ShiftPair conjugate_pair(cplx d1) { return {d1, std::conj(d1)}; }
};

// L(s, chi_{-8d}) = q^{-s} sum_{a=1}^{q} chi(a) zeta_H(s, a/q), q = 8d.
cplx l_value(cplx s, const Discriminant& d);

// Completed xi in the normalization above.
cplx xi_value(cplx s, const Discriminant& d);

class CompletedL {
public:
    explicit CompletedL(Discriminant d, double tol = 1e-11);

    const Discriminant& disc() const { return d_; }

    cplx lambda(cplx s) const;       // (q/pi)^{(s+1)/2} Gamma((s+1)/2) L(s)
    double lambda(double sigma) const;
    cplx xi(cplx s) const;           // paper normalization: (q/pi)^{-3/4} Lambda(s)
    double xi(double sigma) const;
    cplx l(cplx s) const;            // divide the gamma factor back out
    double l(double sigma) const;

    // L(sigma0 + k*step), k = 0..count-1, via a per-node geometric recurrence.
    std::vector<double> l_on_grid(double sigma0, double step, int count) const;
    // xi(1/2 + i(t0 + k*step)) (real-valued) on a uniform grid.
    std::vector<double> xi_critical_grid(double t0, double step, int count) const;

private:
    Discriminant d_;
    std::vector<double> nodes_, weights_, theta_;  // u-nodes, K15 weights, theta(e^u)
};

// W_{delta,tau}(x) = (1/2 pi i) int_{(c)} Gamma_delta(s) x^{-s} 2s/(s^2-tau^2) ds
// by truncated vertical-line quadrature at Re s = c > |Re tau|.
cplx w_kernel(double x, cplx delta, cplx tau, const QuadratureSpec& q, double c = 1.0);

// Fixed-node contour table for evaluating W at many arguments with one setup.
class WKernelTable {
public:
    WKernelTable(cplx delta, cplx tau, const QuadratureSpec& q, double c = 1.0);
    cplx operator()(double x) const;
    double abscissa() const { return c_; }

private:
    double c_;
    std::vector<double> t_;   // imaginary parts of the contour nodes
    std::vector<cplx> k_;     // quadrature weight times kernel factor at each node
};

struct AfeResult {
    cplx value;
    double tail_bound;
    i64 n_terms;
};

// A_{delta,tau}(d) = sum_n r_delta(n)/sqrt(n) (-8d|n) W_{delta,tau}(n pi / 8d),
// truncated using the exponential decay of W; certified tail bound reported.
AfeResult afe_product(const Discriminant& d, const ShiftPair& shifts, const QuadratureSpec& q);

struct PositivityReport {
    bool positive;
    double min_value;
    double min_location;
    // bracketing interval around a sign change; meaningful when !positive
    double bracket_lo = 0.0, bracket_hi = 0.0;
};

// Evaluates L(sigma, chi_{-8d}) on a grid over [0,1] with local refinement of
// the minimum; reports the minimum and a sign-change bracket if one exists.
PositivityReport positivity_check(const Discriminant& d, double grid_step, const QuadratureSpec& q);

struct ZeroList {
    i64 d;
    double resolution;
    std::vector<double> ordinates;  // gamma > 0 sorted increasing, xi(1/2+i gamma) = 0
};

// Sign-change scan of t -> xi(1/2+it) on [0, t_max], bisection-refined to 1e-8.
ZeroList scan_zeros(const Discriminant& d, double t_max, double resolution);

// (1/2) sum_{|gamma log X| <= S} cos(pi gamma log X / (2S)) over +-gamma pairs
// from the scanned list.
double low_zero_statistic(const ZeroList& zeros, double S, double logX);

}  // namespace qdl
