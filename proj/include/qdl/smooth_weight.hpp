// Smooth plateau weight on (1,2): Phi = 1 on (1+eps, 2-eps), C-infinity ramps
// built from exp(-1/x) smoothstep at both ends, derivatives up to order 3 in
// closed form. Also the Mellin transform Phi_check(w) = int Phi(y) y^w dy and
// the derivative norms Phi_(nu) = max_{j<=nu} int_1^2 |Phi^(j)|.

#pragma once

#include <array>

#include "qdl/quadrature.hpp"

namespace qdl {

using cplx = std::complex<double>;

class SmoothWeight {
public:
    explicit SmoothWeight(double eps = 0.05);

    double eps() const { return eps_; }
    double operator()(double t) const { return deriv(0, t); }
    double deriv(int j, double t) const;       // Phi^{(j)}(t), 0 <= j <= 3

    double norm(int nu) const;                 // Phi_(nu), cached

private:
    double eps_;
    mutable std::array<double, 4> norms_{-1.0, -1.0, -1.0, -1.0};
};

// Phi_check(w) for Re w > -1 by adaptive quadrature over [1,2].
cplx mellin_weight(cplx w, const SmoothWeight& phi, const QuadratureSpec& q);

}  // namespace qdl
