#include "qdl/arith.hpp"

#include <cmath>
#include <numbers>

namespace qdl {

int kronecker(i64 a, i64 n) {
    // (a|0) = 1 iff a = +-1
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

    if (a % 2 == 0 && n % 2 == 0) return 0;

    // strip twos from n; (a|2) = 0, a even; +1, a = +-1 mod 8; -1, a = +-3 mod 8
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    int k = 1;
    if (v % 2 == 1) {
        i64 am = a % 8; if (am < 0) am += 8;
        if (am == 3 || am == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // now n odd positive; standard Jacobi loop with reciprocity
    a %= n; if (a < 0) a += n;
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) { a /= 2; ++v; }
        if (v % 2 == 1) {
            i64 nm = n % 8;
            if (nm == 3 || nm == 5) k = -k;
        }
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        i64 t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? k : 0;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<i64, int>> f;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

i64 squarefree_kernel(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n)) r *= p;
    return r;
}

bool is_squarefree(i64 n) {
    if (n < 1) return false;
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

SquarefreeSieve::SquarefreeSieve(i64 limit) : limit_(limit) {
    if (limit < 1) throw std::invalid_argument("SquarefreeSieve: limit must be >= 1");
    if (limit > (i64(1) << 34))
        throw std::length_error("SquarefreeSieve: limit too large for in-memory table");
    std::size_t n = static_cast<std::size_t>(limit) + 1;
    mu_.assign(n, 1);
    mu_[0] = 0;
    // linear sieve
    std::vector<i64> primes;
    std::vector<char> composite(n, 0);
    for (i64 i = 2; i <= limit; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            mu_[static_cast<std::size_t>(i)] = -1;
        }
        for (i64 p : primes) {
            if (i * p > limit) break;
            composite[static_cast<std::size_t>(i * p)] = 1;
            if (i % p == 0) {
                mu_[static_cast<std::size_t>(i * p)] = 0;
                break;
            }
            mu_[static_cast<std::size_t>(i * p)] =
                static_cast<std::int8_t>(-mu_[static_cast<std::size_t>(i)]);
        }
    }
}

namespace {

int mobius_of(i64 n) {
    int m = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

}  // namespace

i64 m_y(i64 d, double Y) {
    if (d < 1) throw std::invalid_argument("m_y: d must be >= 1");
    i64 s = 0;
    for (i64 l = 1; l * l <= d; ++l)
        if (d % (l * l) == 0 && static_cast<double>(l) <= Y) s += mobius_of(l);
    return s;
}

i64 r_y(i64 d, double Y) {
    if (d < 1) throw std::invalid_argument("r_y: d must be >= 1");
    i64 s = 0;
    for (i64 l = 1; l * l <= d; ++l)
        if (d % (l * l) == 0 && static_cast<double>(l) > Y) s += mobius_of(l);
    return s;
}

cplx r_shift(i64 n, cplx s) {
    if (n < 1) throw std::invalid_argument("r_shift: n must be >= 1");
    cplx tot = 0.0;
    for (i64 a = 1; a * a <= n; ++a) {
        if (n % a) continue;
        i64 b = n / a;
        double lr = std::log(static_cast<double>(a) / static_cast<double>(b));
        tot += std::exp(s * lr);
        if (a != b) tot += std::exp(-s * lr);
    }
    return tot;
}

std::vector<cplx> r_shift_table(i64 n_max, cplx s) {
    if (n_max < 1) throw std::invalid_argument("r_shift_table: n_max must be >= 1");
    std::vector<double> lg(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (i64 n = 1; n <= n_max; ++n) lg[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
    std::vector<cplx> r(static_cast<std::size_t>(n_max) + 1, cplx(0.0));
    for (i64 a = 1; a <= n_max; ++a) {
        double la = lg[static_cast<std::size_t>(a)];
        for (i64 b = 1; a * b <= n_max; ++b)
            r[static_cast<std::size_t>(a * b)] += std::exp(s * (la - lg[static_cast<std::size_t>(b)]));
    }
    return r;
}

cplx gauss_sum_direct(i64 k, i64 n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("gauss_sum_direct: n must be odd and positive");
    const double two_pi = 2.0 * std::numbers::pi;
    cplx sum = 0.0;
    for (i64 a = 0; a < n; ++a) {
        int ch = kronecker(a, n);
        if (!ch) continue;
        // e(ak/n)
        i64 m = (a % n) * (k % n) % n;
        if (m < 0) m += n;
        double ang = two_pi * static_cast<double>(m) / static_cast<double>(n);
        sum += static_cast<double>(ch) * cplx(std::cos(ang), std::sin(ang));
    }
    cplx front = kronecker(-1, n) == 1 ? cplx(1.0, 0.0) : cplx(0.0, -1.0);
    // ((1-i)/2 + (-1|n)(1+i)/2) equals 1 when (-1|n)=1 and -i when (-1|n)=-1
    return front * sum;
}

namespace {

i64 ipow(i64 p, int e) {
    i64 r = 1;
    while (e--) r *= p;
    return r;
}

// G_k(p^beta) per the five-case prime-power table; alpha = v_p(k), infinite for k=0.
cplx gauss_sum_prime_power(i64 k, i64 p, int beta) {
    // alpha = v_p(k), with k=0 treated as alpha = +infinity
    bool alpha_inf = (k == 0);
    int alpha = 0;
    i64 kk = k < 0 ? -k : k;
    if (!alpha_inf)
        while (kk % p == 0) { kk /= p; ++alpha; }

    if (alpha_inf || beta <= alpha) {
        // phi(p^beta) for beta even, 0 for beta odd
        if (beta % 2 == 1) return 0.0;
        return static_cast<double>(ipow(p, beta) - ipow(p, beta - 1));
    }
    if (beta == alpha + 1) {
        if (beta % 2 == 0) return -static_cast<double>(ipow(p, alpha));
        i64 kfree = k / ipow(p, alpha);  // k p^{-alpha}, sign kept
        return static_cast<double>(kronecker(kfree, p)) * static_cast<double>(ipow(p, alpha)) *
               std::sqrt(static_cast<double>(p));
    }
    return 0.0;  // beta >= alpha + 2
}

}  // namespace

cplx gauss_sum(i64 k, i64 n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("gauss_sum: n must be odd and positive");
    cplx g = 1.0;
    for (auto [p, e] : factorize(n)) {
        g *= gauss_sum_prime_power(k, p, e);
        if (g == 0.0) return 0.0;
    }
    return g;
}

}  // namespace qdl
