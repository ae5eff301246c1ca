// Character-average Poisson identity for smooth F supported in (1,2) and odd n:
//
//   S_M((d|n); F) = (1/2n) (2|n) sum_{alpha<=Y, (alpha,2n)=1} mu(alpha)/alpha^2
//                     sum_{k in Z} (-1)^k G_k(n) Ftilde(k X / (2 alpha^2 n)),
//
// where S_M(a_d; F) = (1/X) sum_{d odd} M_Y(d) a_d F(d/X) and
// Ftilde(xi) = int (cos(2 pi xi x) + sin(2 pi xi x)) F(x) dx.

#pragma once

#include "qdl/arith.hpp"
#include "qdl/quadrature.hpp"
#include "qdl/smooth_weight.hpp"

namespace qdl {

double tilde_transform(const SmoothWeight& F, double xi, const QuadratureSpec& q);

// Direct evaluation of the d-sum (the left-hand side).
double poisson_lhs(i64 n, double X, double Y, const SmoothWeight& F);

struct PoissonRhs {
    double value;
    double k_tail_bound;  // bound on the discarded k-tail
    i64 k_max;
};

// The Gauss-sum side, k-sum truncated once the Ftilde decay bound (by parts,
// order 3) drops below tail_tol.
PoissonRhs poisson_rhs(i64 n, double X, double Y, const SmoothWeight& F, const QuadratureSpec& q,
                       double tail_tol = 1e-6);

}  // namespace qdl
