// The mollifier M(s,d) = sum_{n<=M} lambda(n) n^{-s} chi_{-8d}(n) with
// coefficients lambda(n) = mu(n) Q(log(M/n)/log M) supported on odd square-free
// n, where Q = P on [0,b] and Q = 1 on (b,1]; the derived Dirichlet-series
// coefficients b(n) of B = L*M - 1; and the weighted family averages
// S(a_d; Phi) and the empirical shifted moment W(delta1, Phi).

#pragma once

#include <functional>

#include "qdl/arith.hpp"
#include "qdl/lfun.hpp"
#include "qdl/smooth_weight.hpp"

namespace qdl {

struct Polynomial {
    std::vector<double> c;  // c[k] x^k

    double operator()(double x) const {
        double r = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k];
        return r;
    }
    Polynomial derivative() const {
        if (c.size() <= 1) return {{0.0}};
        std::vector<double> d(c.size() - 1);
        for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = k * c[k];
        return {d};
    }
};

struct MollifierShape {
    double length;      // M
    double breakpoint;  // b
    Polynomial P, Pp, Ppp;

    MollifierShape(double M, double b, Polynomial poly);

    // Q = P on [0,b], 1 on (b,1]
    double Q(double x) const { return x <= breakpoint ? P(x) : 1.0; }
    double Qp(double x) const { return x <= breakpoint ? Pp(x) : 0.0; }
    double Qpp(double x) const { return x <= breakpoint ? Ppp(x) : 0.0; }

    // P(x) = 3(x/b)^2 - 2(x/b)^3: the minimal-degree polynomial with
    // P(0)=P'(0)=0, P(b)=1, P'(b)=0.
    static Polynomial hermite_cubic(double b);
};

class LambdaTable {
public:
    LambdaTable(const MollifierShape& shape, const SquarefreeSieve& sieve);

    i64 length() const { return len_; }                    // floor(M)
    const MollifierShape& shape() const { return shape_; }
    double operator[](i64 n) const {
        if (n < 1 || n > len_) return 0.0;
        return values_[static_cast<std::size_t>(n)];
    }
    // nonzero entries as (n, lambda(n)), increasing n
    const std::vector<std::pair<i64, double>>& support() const { return support_; }

private:
    MollifierShape shape_;
    i64 len_;
    std::vector<double> values_;
    std::vector<std::pair<i64, double>> support_;
};

// M(s,d) = sum_{n<=M} lambda(n) n^{-s} chi_{-8d}(n)
cplx m_poly(cplx s, const Discriminant& d, const LambdaTable& table);

// Coefficients b(n) of B(s,d) = L(s)M(s,d) - 1 as a Dirichlet series in the
// character variable: b(n) = sum_{m|n, m<=M} lambda(m) for odd n >= 3, b(1) = 0,
// and b(n) = 0 for even n (the character has even modulus, so even n never
// enter the series).
std::vector<double> b_coefficients(const LambdaTable& table, i64 n_max);

// S(a_d; Phi) = (1/X) sum_{d odd} mu^2(d) a_d Phi(d/X), deterministic order.
cplx s_weighted(const std::function<cplx(i64)>& values, const SmoothWeight& phi, double X,
                const SquarefreeSieve& sieve);

enum class LEngine { theta, hurwitz };

// W(delta1, Phi) = S(|L M(1/2+delta1)|^2; Phi) / S(1; Phi) over all odd
// square-free d in [X, 2X]. delta2 = conj(delta1) is implied.
double moment_empirical(cplx delta1, const SmoothWeight& phi, double X, const LambdaTable& table,
                        const SquarefreeSieve& sieve, LEngine engine = LEngine::theta,
                        int threads = 1);

}  // namespace qdl
