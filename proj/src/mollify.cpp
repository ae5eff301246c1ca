#include "qdl/mollify.hpp"

#include <cmath>

#include "qdl/parallel.hpp"

namespace qdl {

MollifierShape::MollifierShape(double M, double b, Polynomial poly)
    : length(M), breakpoint(b), P(std::move(poly)) {
    if (M < 1.0) throw std::invalid_argument("MollifierShape: M must be >= 1");
    if (b <= 0.0 || b >= 1.0) throw std::invalid_argument("MollifierShape: b must lie in (0,1)");
    Pp = P.derivative();
    Ppp = Pp.derivative();
    const double tol = 1e-12;
    if (std::abs(P(0.0)) > tol || std::abs(Pp(0.0)) > tol || std::abs(P(b) - 1.0) > tol ||
        std::abs(Pp(b)) > tol)
        throw std::invalid_argument(
            "MollifierShape: P must satisfy P(0)=P'(0)=0, P(b)=1, P'(b)=0");
}

Polynomial MollifierShape::hermite_cubic(double b) {
    return {{0.0, 0.0, 3.0 / (b * b), -2.0 / (b * b * b)}};
}

LambdaTable::LambdaTable(const MollifierShape& shape, const SquarefreeSieve& sieve)
    : shape_(shape), len_(static_cast<i64>(std::floor(shape.length))) {
    if (sieve.limit() < len_)
        throw std::invalid_argument("LambdaTable: sieve limit smaller than mollifier length");
    values_.assign(static_cast<std::size_t>(len_) + 1, 0.0);
    double logM = std::log(shape_.length);
    for (i64 n = 1; n <= len_; n += 2) {
        int mu = sieve.mu(n);
        if (!mu) continue;
        double x = std::log(shape_.length / static_cast<double>(n)) / logM;
        double v = mu * shape_.Q(x);
        values_[static_cast<std::size_t>(n)] = v;
        if (v != 0.0) support_.emplace_back(n, v);
    }
}

cplx m_poly(cplx s, const Discriminant& d, const LambdaTable& table) {
    cplx acc = 0.0;
    for (auto [n, lam] : table.support()) {
        int ch = d.chi(n);
        if (!ch) continue;
        acc += lam * static_cast<double>(ch) * pow_negs(std::log(static_cast<double>(n)), s);
    }
    return acc;
}

std::vector<double> b_coefficients(const LambdaTable& table, i64 n_max) {
    if (n_max < 1) throw std::invalid_argument("b_coefficients: n_max must be >= 1");
    std::vector<double> b(static_cast<std::size_t>(n_max) + 1, 0.0);
    // divisor sieve over the lambda support
    for (auto [m, lam] : table.support())
        for (i64 n = m; n <= n_max; n += m) b[static_cast<std::size_t>(n)] += lam;
    b[0] = 0.0;
    if (n_max >= 1) b[1] = 0.0;                       // lambda(1) - 1
    for (i64 n = 2; n <= n_max; n += 2) b[static_cast<std::size_t>(n)] = 0.0;  // character-killed
    return b;
}

cplx s_weighted(const std::function<cplx(i64)>& values, const SmoothWeight& phi, double X,
                const SquarefreeSieve& sieve) {
    i64 lo = static_cast<i64>(std::floor(X)), hi = static_cast<i64>(std::ceil(2.0 * X));
    if (sieve.limit() < hi) throw std::invalid_argument("s_weighted: sieve too small for [X,2X]");
    std::vector<cplx> terms;
    sieve.for_each_odd_squarefree(lo, hi, [&](i64 d) {
        double w = phi(static_cast<double>(d) / X);
        if (w != 0.0) terms.push_back(w * values(d));
    });
    return pairwise_sum(terms) / X;
}

double moment_empirical(cplx delta1, const SmoothWeight& phi, double X, const LambdaTable& table,
                        const SquarefreeSieve& sieve, LEngine engine, int threads) {
    const cplx s0 = 0.5 + delta1;
    i64 lo = static_cast<i64>(std::floor(X)), hi = static_cast<i64>(std::ceil(2.0 * X));
    if (sieve.limit() < hi)
        throw std::invalid_argument("moment_empirical: sieve too small for [X,2X]");

    std::vector<i64> ds;
    sieve.for_each_odd_squarefree(lo, hi, [&](i64 d) {
        if (phi(static_cast<double>(d) / X) != 0.0) ds.push_back(d);
    });

    std::vector<double> num(ds.size()), den(ds.size());
    parallel_for(ds.size(), threads, [&](std::size_t i) {
        Discriminant dd(ds[i]);
        cplx Lv;
        if (engine == LEngine::theta) {
            CompletedL eng(dd);
            Lv = eng.l(s0);
        } else {
            Lv = l_value(s0, dd);
        }
        cplx Mv = m_poly(s0, dd, table);
        double w = phi(static_cast<double>(ds[i]) / X);
        num[i] = std::norm(Lv * Mv) * w;
        den[i] = w;
    });
    double nsum = pairwise_sum(num), dsum = pairwise_sum(den);
    if (dsum == 0.0) throw std::runtime_error("moment_empirical: empty weighted family");
    return nsum / dsum;
}

}  // namespace qdl
