// Analytic main terms and the numerical bound pipeline:
//  * V(u,v), the scaling limit of the shifted mollified second moment;
//  * the finite-(X,M) main term of W(delta1, Phi): both the exact four-term
//    Euler-product evaluation summed over mollifier pairs (moment_main_term)
//    and the closed-form large-M asymptotic (moment_main_term_asymptotic);
//  * J1/J2 box integrals, the bound constant c = (J1+J2)/(8S sinh(pi R/2S));
//  * the one-level-density integral of the symplectic family;
//  * parameter scans over (R, b, P).

#pragma once

#include <optional>
#include <string>

#include "qdl/lfun.hpp"
#include "qdl/mollify.hpp"
#include "qdl/smooth_weight.hpp"

namespace qdl {

struct BoundParams {
    double R = 6.8;
    double b = 0.64;
    double S;          // defaults to pi/(2(1-b))
    Polynomial P;      // defaults to the Hermite cubic for b
    double rho = 2.0;  // logX / logM

    BoundParams();
    BoundParams(double R_, double b_, Polynomial P_, double rho_ = 2.0,
                std::optional<double> S_ = std::nullopt);

    double Qp(double x) const { return Pp_(x); }
    double Qpp(double x) const { return Ppp_(x); }

private:
    Polynomial Pp_, Ppp_;
};

// V(u,v) = 1 + rho e^{-u} (sinh u/u - sin v/v)
//            int_0^b e^{-2u(1-x)/rho} |Q'(x) + Q''(x) rho/(2(u+iv))|^2 dx.
// At (0,0) the product has the removable limit 1 + (rho/12) int_0^b Q''^2.
double v_func(double u, double v, const BoundParams& params,
              const QuadratureSpec& q = QuadratureSpec());

// Exact main term of W(delta1, Phi) at finite X and M: the four-term
// Gamma_delta/Z/eta expression per mollifier pair (r,s), normalized by the
// asymptotic family density (2/(3 zeta(2))) Phi_check(0). Requires
// delta2 = conj(delta1) and the shifted-moment regime |delta1| >= eps/log X,
// Re delta1 in [-1/(eps log X), 1/4].
double moment_main_term(const ShiftPair& shifts, double X, const MollifierShape& shape,
                        const SmoothWeight& phi = SmoothWeight(),
                        const QuadratureSpec& q = QuadratureSpec(), double eps = 0.05);

// The closed-form large-M asymptotic of the same quantity:
//   1 + (ln A / log M) e^{-tau ln A} (sinhc(tau ln A) - sinhc(delta ln A))
//       int_0^b M^{-2 tau (1-x)} |Q'(x) + Q''(x)/(2 delta1 log M)|^2 dx,
// A = 8X/pi. Converges to v_func as X -> inf with delta1 = (u+iv)/log X.
double moment_main_term_asymptotic(const ShiftPair& shifts, double X, const MollifierShape& shape,
                                   const QuadratureSpec& q = QuadratureSpec(), double eps = 0.05);

struct JIntegrals {
    double J1, J2;
    double tail_bound;  // bound on the discarded J2 tail beyond u_max
};

// J1 = int_0^S cos(pi t/2S) log V(-R, t) dt,
// J2 = int_0^{u_max} sinh(pi u/2S) log V(u-R, S) du  (u^{-4}-decaying tail).
JIntegrals j_integrals(const BoundParams& params, const QuadratureSpec& q,
                       double u_max = 60.0);

// c = (J1+J2) / (8 S sinh(pi R/2S)); 1-c lower-bounds the no-real-zero
// proportion of the weighted family.
double bound_constant(const BoundParams& params, const QuadratureSpec& q);

// Correction family on top of the Hermite cubic: each entry c gives
//   P(x) = cubic_b(x) + sum_j c[j] (x/b)^{2+j} (1-(x/b))^2,
// which satisfies the endpoint constraints by construction.
struct PolyFamilySpec {
    std::vector<std::vector<double>> corrections{{}};  // {} = plain cubic
};

struct ScanRow {
    double R, b;
    std::vector<double> correction;
    double c;
    bool pinned;  // the reference parameter point
};

// Exhaustive bound_constant evaluation over the grids; rows sorted by c,
// the reference point (R=6.8, b=0.64, cubic) always present.
std::vector<ScanRow> param_scan(const std::vector<double>& R_grid,
                                const std::vector<double>& b_grid, const PolyFamilySpec& family,
                                const QuadratureSpec& q);

// int_0^{S/2pi} cos(pi^2 x/S) (1 - sin(2 pi x)/(2 pi x)) dx
double ks_density_integral(double S, const QuadratureSpec& q);

// Main term of S_M((-8d|l) A_{delta,tau}(d); Psi) for odd l: the four-term
// expression with Z, eta and the Mellin transform of Psi. Rejects shift
// configurations within 1e-3 of the singular set {tau=0, delta=0, tau=+-delta}.
cplx prop23_main_term(i64 l, const ShiftPair& shifts, double X, const SmoothWeight& psi,
                      const QuadratureSpec& q);

}  // namespace qdl
