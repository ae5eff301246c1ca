#include "qdl/special.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qdl {

namespace {

using std::numbers::pi;

// --- double-double helpers for the large Lanczos/power exponents ---

struct dd {
    double hi, lo;
};

dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return two_sum(s.hi, lo);
}

dd dd_mul_d(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return two_sum(p.hi, p.lo);
}

// exp(x + iy) where both components carry a compensation term
cplx exp_dd(dd re, dd im) {
    double m = std::exp(re.hi) * (1.0 + re.lo);
    double c = std::cos(im.hi), s = std::sin(im.hi);
    // first-order rotation by the tiny im.lo
    return {m * (c - im.lo * s), m * (s + im.lo * c)};
}

// --- Lanczos rational approximation (g = 6.024680..., 13 terms) ---

constexpr double lanczos_g = 6.024680040776729583740234375;

constexpr double lanczos_num[13] = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626};

constexpr double lanczos_den[13] = {
    0.0, 39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0,
    13339535.0, 2637558.0, 357423.0, 32670.0, 1925.0, 66.0, 1.0};

cplx lanczos_sum(cplx z) {
    cplx num = 0.0, den = 0.0;
    for (int i = 12; i >= 0; --i) {
        num = num * z + lanczos_num[i];
        den = den * z + lanczos_den[i];
    }
    return num / den;
}

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log sin(pi z), stable for large |Im z|; branch only consistent up to 2*pi*i*k,
// which cancels under exponentiation.
cplx log_sin_pi(cplx z) {
    double y = z.imag();
    if (y > 18.0) {
        // sin(pi z) = -e^{-i pi z}/(2i) (1 - e^{2 i pi z})
        cplx ipz = cplx(0.0, pi) * z;
        return -ipz - std::log(cplx(0.0, 2.0)) + std::log(1.0 - std::exp(2.0 * ipz));
    }
    if (y < -18.0) {
        cplx ipz = cplx(0.0, pi) * z;
        return ipz - std::log(cplx(0.0, -2.0)) + std::log(1.0 - std::exp(-2.0 * ipz));
    }
    return std::log(std::sin(pi * z));
}

cplx log_gamma_core(cplx z) {
    // Re z >= 0.5 assumed
    cplx sum = lanczos_sum(z);
    double zgh_re = z.real() + (lanczos_g - 0.5);
    cplx zgh(zgh_re, z.imag());
    cplx lg = std::log(zgh);
    // w = (z - 0.5) * log(zgh) - zgh, compensated
    dd re = dd_add(two_prod(z.real() - 0.5, lg.real()),
                   two_prod(-z.imag(), lg.imag()));
    re = dd_add(re, {-zgh_re, 0.0});
    dd im = dd_add(two_prod(z.real() - 0.5, lg.imag()),
                   two_prod(z.imag(), lg.real()));
    im = dd_add(im, {-z.imag(), 0.0});
    cplx ls = std::log(sum);
    re = dd_add(re, {ls.real(), 0.0});
    im = dd_add(im, {ls.imag(), 0.0});
    return {re.hi + re.lo, im.hi + im.lo};
}

cplx gamma_core(cplx z) {
    cplx sum = lanczos_sum(z);
    double zgh_re = z.real() + (lanczos_g - 0.5);
    cplx zgh(zgh_re, z.imag());
    cplx lg = std::log(zgh);
    dd re = dd_add(two_prod(z.real() - 0.5, lg.real()),
                   two_prod(-z.imag(), lg.imag()));
    re = dd_add(re, {-zgh_re, 0.0});
    dd im = dd_add(two_prod(z.real() - 0.5, lg.imag()),
                   two_prod(z.imag(), lg.real()));
    im = dd_add(im, {-z.imag(), 0.0});
    return sum * exp_dd(re, im);
}

}  // namespace

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return gamma_core(z);
    // reflection in log space to dodge overflow of sin(pi z)
    cplx lg = std::log(cplx(pi)) - log_sin_pi(z) - log_gamma_core(1.0 - z);
    return std::exp(lg);
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return log_gamma_core(z);
    return std::log(cplx(pi)) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

double digamma(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("digamma: pole at non-positive integer");
    double result = 0.0;
    while (x < 8.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series
    double inv = 1.0 / x, inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv;
    static const double c[7] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                                1.0 / 132, -691.0 / 32760, 1.0 / 12};
    double p = inv2;
    for (int k = 0; k < 7; ++k) {
        result -= c[k] * p;
        p *= inv2;
    }
    return result;
}

cplx gamma_delta(cplx s, cplx delta) {
    return gamma(0.75 + 0.5 * s + 0.5 * delta) * gamma(0.75 + 0.5 * s - 0.5 * delta);
}

cplx pow_negs(double log_base, cplx s) {
    dd re = two_prod(-s.real(), log_base);
    dd im = two_prod(-s.imag(), log_base);
    return exp_dd(re, im);
}

namespace {

// B_{2k} for k = 1..16
constexpr double bern2k[17] = {
    0.0,
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
    -7709321041217.0 / 510};

// Euler-Maclaurin for zeta_H(s, a); shared core for both zeta functions.
cplx em_hurwitz(cplx s, double a, int N, int K) {
    cplx sum = 0.0;
    for (int n = 0; n < N; ++n) sum += pow_negs(std::log(n + a), s);
    double Na = N + a;
    double lNa = std::log(Na);
    cplx p = pow_negs(lNa, s);              // (N+a)^{-s}
    sum += p * Na / (s - 1.0);              // (N+a)^{1-s}/(s-1)
    sum += 0.5 * p;
    // correction terms: B_{2k}/(2k)! * (s)_{2k-1} * (N+a)^{-s-2k+1}
    cplx poch = s;                          // (s)_1
    double fact = 2.0;                      // (2k)!
    double npow = 1.0 / Na;                 // (N+a)^{-(2k-1)}
    double na2 = 1.0 / (Na * Na);
    for (int k = 1; k <= K; ++k) {
        sum += p * (bern2k[k] / fact) * poch * npow;  // exponent -s-2k+1
        if (k == K) break;
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        npow *= na2;
    }
    return sum;
}

int em_terms_for(cplx s) {
    double t = std::abs(s.imag());
    return std::max(24, static_cast<int>(std::ceil(0.55 * t)) + 16);
}

}  // namespace

cplx hurwitz_zeta(cplx s, double a) {
    if (a <= 0.0 || a > 1.0) throw std::invalid_argument("hurwitz_zeta: need 0 < a <= 1");
    if (s == cplx(1.0)) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (s.real() < -5.0 - 1e-12 || std::abs(s.imag()) > 220.0)
        throw std::domain_error("hurwitz_zeta: outside the supported domain");
    return em_hurwitz(s, a, em_terms_for(s), 14);
}

cplx zeta(cplx s) {
    if (s == cplx(1.0)) throw std::domain_error("zeta: pole at s = 1");
    if (s.real() < -5.0 - 1e-12 || std::abs(s.imag()) > 220.0)
        throw std::domain_error("zeta: outside the supported domain");
    // dedicated Euler-Maclaurin specialization at a = 1 with its own tuning
    double t = std::abs(s.imag());
    int N = std::max(20, static_cast<int>(std::ceil(0.62 * t)) + 12);
    cplx sum = 1.0;
    for (int n = 2; n <= N; ++n) sum += pow_negs(std::log(static_cast<double>(n)), s);
    double Na = N + 1.0;
    double lNa = std::log(Na);
    cplx p = pow_negs(lNa, s);
    sum += p * Na / (s - 1.0) + 0.5 * p;
    cplx poch = s;
    double fact = 2.0;
    double npow = 1.0 / Na;
    double na2 = 1.0 / (Na * Na);
    for (int k = 1; k <= 15; ++k) {
        sum += p * (bern2k[k] / fact) * poch * npow;
        if (k == 15) break;
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        npow *= na2;
    }
    return sum;
}

cplx zeta1p(cplx x) {
    if (std::abs(x) >= 0.25) return zeta(1.0 + x) - 1.0 / x;
    // zeta(1+x) = 1/x + sum_{n>=0} (-1)^n gamma_n x^n / n!
    static const double stieltjes[11] = {
        0.57721566490153286060651209008240243,
        -0.072815845483676724860586375874901319,
        -0.0096903631928723184845303860352125293,
        0.0020538344203033458661600465427533842,
        0.0023253700654673000574681701775260680,
        0.00079332381730106270175333487744444483,
        -0.00023876934543019960987242184190800427,
        -0.00052728956705775104607409750547885828,
        -0.00035212335380303950960205216500120874,
        -0.000034394774418088048177914623798227390,
        0.00020533281490906479468372228923706530};
    cplx sum = 0.0, xp = 1.0;
    double fact = 1.0, sign = 1.0;
    for (int n = 0; n <= 10; ++n) {
        sum += sign * stieltjes[n] / fact * xp;
        xp *= x;
        fact *= (n + 1.0);
        sign = -sign;
    }
    return sum;
}

cplx big_z(cplx s, cplx w) {
    return zeta(s - 2.0 * w) * zeta(s) * zeta(s + 2.0 * w);
}

// --- shared prime table ---

namespace {
std::vector<i64> g_odd_primes;
i64 g_prime_limit = 0;
std::mutex g_prime_mutex;
}  // namespace

const std::vector<i64>& odd_primes_upto(i64 limit) {
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    if (limit > g_prime_limit) {
        std::vector<char> comp(static_cast<std::size_t>(limit) + 1, 0);
        std::vector<i64> primes;
        for (i64 i = 3; i <= limit; i += 2) {
            if (comp[static_cast<std::size_t>(i)]) continue;
            primes.push_back(i);
            for (i64 j = i * i; j <= limit; j += 2 * i) comp[static_cast<std::size_t>(j)] = 1;
        }
        g_odd_primes = std::move(primes);
        g_prime_limit = limit;
    }
    return g_odd_primes;
}

cplx eta_local_factor(i64 p, cplx s, cplx w, int lcase) {
    double lp = std::log(static_cast<double>(p));
    cplx ps = pow_negs(lp, s);  // p^{-s}
    cplx front = static_cast<double>(p) / (p + 1.0);
    switch (lcase) {
        case 1:
            return front * (1.0 - ps);
        case 2:
            return front * (1.0 - ps * ps);
        default: {
            cplx p2w = std::exp(2.0 * w * lp);  // p^{2w}
            cplx ps1 = ps / static_cast<double>(p);
            return front * (1.0 - ps) *
                   (1.0 + 1.0 / static_cast<double>(p) + ps - (p2w + 1.0 / p2w) * ps1 +
                    ps * ps / static_cast<double>(p));
        }
    }
}

namespace {

// remainder factor after pulling the four zeta-like parts out of the generic factor
cplx eta_remainder_factor(i64 p, cplx s, cplx w) {
    double lp = std::log(static_cast<double>(p));
    cplx a = pow_negs(lp, s + 1.0 - 2.0 * w);
    cplx b = pow_negs(lp, s + 1.0);
    cplx c = pow_negs(lp, s + 1.0 + 2.0 * w);
    cplx d = pow_negs(lp, 2.0 * s);
    return eta_local_factor(p, s, w, 0) / ((1.0 - a) * (1.0 - b) * (1.0 - c) * (1.0 - d));
}

cplx zeta_odd(cplx z) {  // zeta(z) with the p=2 Euler factor removed
    return zeta(z) * (1.0 - std::exp(-z * std::log(2.0)));
}

}  // namespace

EtaResult eta(cplx w, cplx s, i64 l, double abs_tol) {
    if (l < 1 || l % 2 == 0) throw std::invalid_argument("eta: l must be odd and positive");
    if (s.real() <= 0.5) throw std::domain_error("eta: requires Re s > 1/2");
    if (std::abs(w.real()) > 0.25 + 1e-12) throw std::domain_error("eta: requires |Re w| <= 1/4");

    double l2 = std::log(2.0);
    cplx eta2 = (1.0 - std::exp((-s - 2.0 * w) * l2)) * (1.0 - std::exp(-s * l2)) *
                (1.0 - std::exp((-s + 2.0 * w) * l2));

    // theta: decay exponent of the remainder factors
    double sig = s.real(), wre = std::abs(w.real());
    double theta = std::min({sig + 2.0, 2.0 * sig + 1.0 - 4.0 * wre, 3.0 * sig + 1.0});

    i64 plim = 100000;
    for (int attempt = 0;; ++attempt) {
        const auto& primes = odd_primes_upto(plim);
        cplx prod = 1.0;
        double cmax = 0.0;
        for (i64 p : primes) {
            cplx gp = eta_remainder_factor(p, s, w);
            prod *= gp;
            if (p * 10 > plim)
                cmax = std::max(cmax, std::abs(gp - 1.0) * std::pow(static_cast<double>(p), theta));
        }
        double tail_sum = 2.0 * cmax * std::pow(static_cast<double>(plim), 1.0 - theta) / (theta - 1.0);
        cplx base = eta2 * prod /
                    (zeta_odd(s + 1.0 - 2.0 * w) * zeta_odd(s + 1.0) * zeta_odd(s + 1.0 + 2.0 * w) *
                     zeta_odd(2.0 * s));
        cplx value = base;
        for (auto [p, e] : factorize(l)) {
            int lcase = (e % 2 == 1) ? 1 : 2;
            value *= eta_local_factor(p, s, w, lcase) / eta_local_factor(p, s, w, 0);
        }
        double bound = std::abs(value) * (std::expm1(tail_sum));
        if (bound <= abs_tol || theta <= 1.0 + 1e-9) {
            if (theta <= 1.0 + 1e-9 && bound > abs_tol)
                throw std::runtime_error("eta: product converges too slowly in this domain");
            return {value, bound};
        }
        if (attempt >= 2)
            throw std::runtime_error("eta: tail bound above abs_tol at maximal truncation");
        plim *= 10;
    }
}

}  // namespace qdl
