// Exact integer and character arithmetic: Kronecker symbols, Mobius sieving,
// the shifted divisor function r_s(n) = sum_{ab=n} (a/b)^s, and the twisted
// quadratic Gauss sums
//
//   G_k(n) = ((1-i)/2 + (-1/n)(1+i)/2) sum_{a mod n} (a/n) e(ak/n),  n odd,
//
// evaluated both by the defining O(n) sum (the oracle) and by the closed-form
// prime-power table combined with multiplicativity G_k(mn) = G_k(m) G_k(n).

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qdl {

using cplx = std::complex<double>;
using i64 = std::int64_t;

// Kronecker symbol (a|n), fully extended: n may be zero, negative or even.
int kronecker(i64 a, i64 n);

// Trial-division factorization, (prime, exponent) pairs, smallest prime first.
// Intended for desk-scale n.
std::vector<std::pair<i64, int>> factorize(i64 n);

i64 squarefree_kernel(i64 n);           // product of primes dividing n
bool is_squarefree(i64 n);

// Mobius table up to `limit`, stored as signed bytes.
class SquarefreeSieve {
public:
    explicit SquarefreeSieve(i64 limit);

    i64 limit() const { return limit_; }
    int mu(i64 n) const {
        if (n < 1 || n > limit_) throw std::out_of_range("SquarefreeSieve::mu: n outside table");
        return mu_[static_cast<std::size_t>(n)];
    }
    bool squarefree(i64 n) const { return mu(n) != 0; }

    // Streams odd square-free d in [lo, hi] in increasing order.
    template <class F>
    void for_each_odd_squarefree(i64 lo, i64 hi, F&& f) const {
        if (lo < 1) lo = 1;
        if (lo % 2 == 0) ++lo;
        for (i64 d = lo; d <= hi; d += 2)
            if (mu_[static_cast<std::size_t>(d)] != 0) f(d);
    }

private:
    i64 limit_;
    std::vector<std::int8_t> mu_;
};

// M_Y(d) = sum_{l^2|d, l<=Y} mu(l) and R_Y(d) = sum_{l^2|d, l>Y} mu(l),
// so that M_Y(d) + R_Y(d) = mu^2(d) exactly.
i64 m_y(i64 d, double Y);
i64 r_y(i64 d, double Y);

// r_s(n) = sum_{ab=n} (a/b)^s. Even in s, multiplicative on coprime arguments.
cplx r_shift(i64 n, cplx s);

// r_s(n) for all 1 <= n <= n_max by the divisor-pair sieve, O(n_max log n_max).
std::vector<cplx> r_shift_table(i64 n_max, cplx s);

// Direct O(n) evaluation of G_k(n); the oracle for gauss_sum.
cplx gauss_sum_direct(i64 k, i64 n);

// G_k(n) via multiplicativity and the prime-power table. Agrees with
// gauss_sum_direct for all odd n.
cplx gauss_sum(i64 k, i64 n);

// The character chi_{-8d} = (-8d|.) of conductor 8d, d odd square-free.
struct Discriminant {
    i64 d;

    explicit Discriminant(i64 d_) : d(d_) {
        if (d < 1 || d % 2 == 0 || !is_squarefree(d))
            throw std::invalid_argument("Discriminant: d must be a positive odd square-free integer");
    }
    i64 conductor() const { return 8 * d; }
    int chi(i64 n) const { return kronecker(-8 * d, n); }
};

}  // namespace qdl
