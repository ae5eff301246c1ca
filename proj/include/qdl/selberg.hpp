// Selberg's weighted argument-principle identity as a numerical engine. For a
// holomorphic f, nonzero in a half-plane Re z >= W containing the right edge
// of the box [W0,W1] x [-H,H]:
//
//   4H sum_{zeros in box} cos(pi gamma / 2H) sinh(pi (beta - W0) / 2H)
//     =   int_{-H}^{H} cos(pi t/2H) log|f(W0+it)| dt
//       + int_{W0}^{W1} sinh(pi (a-W0)/2H) log|f(a+iH) f(a-iH)| da
//       - Re int_{-H}^{H} cos(pi (W1-W0+it)/2iH) log f(W1+it) dt,
//
// the specialized box integrals I1, I2, I3 for the mollified L-function, and
// the real-zero threshold 8S sinh(pi R / 2S).

#pragma once

#include <functional>

#include "qdl/mollify.hpp"

namespace qdl {

struct SelbergBox {
    double W0, W1, H;

    SelbergBox(double w0, double w1, double h) : W0(w0), W1(w1), H(h) {
        if (!(W0 < W1) || !(H > 0.0))
            throw std::invalid_argument("SelbergBox: needs W0 < W1 and H > 0");
    }
    // W0 = 1/2 - R/logX, H = S/logX
    static SelbergBox from_scaled(double R, double S, double logX, double W1) {
        return {0.5 - R / logX, W1, S / logX};
    }
};

struct AnalyticFunction {
    std::function<cplx(cplx)> f;
    double nonvanishing_abscissa;  // f != 0 on Re s >= this
};

// Continuous-argument tracker along the vertical segment Re s = x0,
// t in [-H, H]; built by adaptive marching, queried at arbitrary t.
class EdgeArgTracker {
public:
    EdgeArgTracker(const std::function<cplx(cplx)>& f, double x0, double H);
    // log f with the tracked branch: log|f| + i arg_cont(f)
    cplx log_f(double t) const;

private:
    const std::function<cplx(cplx)>& f_;
    double x0_;
    std::vector<double> ts_, args_;  // unwrapped argument at marching nodes
};

// Right-hand side of the identity by quadrature; the box may not have zeros of
// f on its boundary (nearby zeros slow convergence; exact hits are perturbed
// per the retry policy and reported via the returned record).
struct SelbergRhs {
    double value;
    double I1, I2, I3;      // the three boundary terms
    int perturbations = 0;  // box-height nudges applied to dodge boundary zeros
};

SelbergRhs selberg_rhs(const AnalyticFunction& f, const SelbergBox& box, const QuadratureSpec& q);

// Exact weighted sum over the supplied zeros (with multiplicity).
double selberg_lhs(const std::vector<cplx>& zeros, const SelbergBox& box);

// 8 S sinh(pi R / 2S): the LHS lower bound forced by a nontrivial real zero.
double real_zero_threshold(double R, double S);

struct MollifiedCount {
    double I1, I2, I3;
    double total() const { return I1 + I2 + I3; }
};

// I1+I2+I3 of the scaled box integrals for f(s) = L(s, chi_{-8d}) M(s,d),
// an upper bound for the weighted zero count. sigma0 must exceed the
// nonvanishing abscissa of f (e.g. 1 + 3 log log M / log M).
MollifiedCount mollified_count(const Discriminant& d, const LambdaTable& table, double R, double S,
                               double logX, double sigma0, const QuadratureSpec& q);

}  // namespace qdl
