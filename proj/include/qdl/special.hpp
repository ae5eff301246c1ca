// Complex special functions: Gamma (Lanczos), Riemann and Hurwitz zeta
// (Euler-Maclaurin), the shifted gamma product
//
//   Gamma_delta(s) = Gamma(3/4 + s/2 + delta/2) Gamma(3/4 + s/2 - delta/2),
//
// the triple-zeta product Z(s;w) = zeta(s-2w) zeta(s) zeta(s+2w), and the
// Euler product eta_w(s;l) with its three-case odd-prime local factors.

#pragma once

#include <cstdint>
#include <vector>

#include "qdl/arith.hpp"

namespace qdl {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Principal-branch log Gamma for Re z > 0; analytic continuation via
// reflection elsewhere (branch chosen so exp(log_gamma(z)) == gamma(z)).
cplx log_gamma(cplx z);
cplx gamma(cplx z);
double digamma(double x);

// Gamma_delta(s); symmetric under delta -> -delta.
cplx gamma_delta(cplx s, cplx delta);

cplx zeta(cplx s);                      // s != 1
cplx hurwitz_zeta(cplx s, double a);    // 0 < a <= 1, s != 1
cplx zeta1p(cplx x);                    // zeta(1+x) - 1/x, entire in x

// Z(s;w) = zeta(s-2w) zeta(s) zeta(s+2w); even in w.
cplx big_z(cplx s, cplx w);

// base^{-s} for base > 0 with a compensated product in the exponent.
cplx pow_negs(double log_base, cplx s);

// Shared odd-prime table (3, 5, 7, ...), extended on demand.
const std::vector<i64>& odd_primes_upto(i64 limit);

struct EtaResult {
    cplx value;
    double tail_bound;   // bound on |value_true - value| from the truncated tail
};

// eta_w(s; l) for odd l = l1 l2^2 (l1 square-free): the even-prime factor
// (1-2^{-s-2w})(1-2^{-s})(1-2^{-s+2w}) times the odd-prime product with the
// three-case local factors. Requires Re s > 1/2 and |Re w| <= 1/4.
// Accelerated by factoring out the zeta-like parts of the generic local factor;
// the remaining product converges fast and is truncated with a certified bound.
EtaResult eta(cplx w, cplx s, i64 l, double abs_tol = 1e-12);

// Local factor of eta at an odd prime: lcase = 0 (p not dividing l),
// 1 (p | l1), 2 (p | l, p not dividing l1). Exposed for tests and for the
// direct partial-product oracle.
cplx eta_local_factor(i64 p, cplx s, cplx w, int lcase);

}  // namespace qdl
