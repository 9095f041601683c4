#include "hg3/asymptotic.hpp"

#include <cmath>

namespace hg3 {

double width_c0() { return std::cbrt(2.0) + std::pow(4.0, -1.0 / 3.0); }

double width_c(long long t, double big_c) {
    if (t < 2) throw std::invalid_argument("width_c: t must be >= 2");
    if (big_c <= width_c0()) {
        throw std::invalid_argument("width_c: C must exceed C0");
    }
    return big_c * std::pow(static_cast<double>(t), -1.0 / 3.0);
}

double width_c(long long t) { return width_c(t, width_c0() * (1 + 1e-3)); }

std::pair<double, double> delta_eps(long long t) {
    if (t < 2) throw std::invalid_argument("delta_eps: t must be >= 2");
    double delta = std::pow(t / 2.0, -1.0 / 3.0);
    double eps = std::pow(4.0 * t, -1.0 / 3.0);
    return {delta, eps};
}

namespace {

void check_even_domain(long long n, long long t) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("n must be even and positive");
    }
    if (t < 1 || t > n) throw std::invalid_argument("need 1 <= t <= n");
}

}  // namespace

Rational hypergeom_tail_exact(long long n, long long t,
                              const Rational& delta) {
    check_even_domain(n, t);
    const long long m = n / 2;
    BigInt hit = 0;
    for (long long k = std::max(0LL, t - m); k <= std::min(t, m); ++k) {
        long long imbalance = k >= t - k ? 2 * k - t : t - 2 * k;
        if (Rational(imbalance) > delta * t) {
            hit += big_binom(m, k) * big_binom(m, t - k);
        }
    }
    return Rational(hit, big_binom(n, t));
}

ChebyshevBounds chebyshev_bound(long long n, long long t,
                                const Rational& delta) {
    check_even_domain(n, t);
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    const long long m = n / 2;
    ChebyshevBounds b;
    // Var[X] = (t/4)(2m - t)/(2m - 1), X ~ Hyp(2m, m, t); 2m >= 2 here.
    Rational var(BigInt(t) * (2 * m - t), BigInt(4) * (2 * m - 1));
    Rational d2 = delta * delta;
    b.tight = 4 * var / (d2 * t * t);
    b.simple = Rational(1) / (d2 * t);
    return b;
}

BigInt max_delta_exact(long long n, long long t) {
    check_even_domain(n, t);
    const long long m = n / 2;
    BigInt total = 0;
    for (long long t1 = t / 2 + 1; t1 <= std::min(t, m); ++t1) {
        long long t2 = t - t1;
        if (t2 > m) continue;
        total += big_binom(m, t1) * big_binom(m, t2) * (t1 - t2);
    }
    return total;
}

Rational paper_delta_bound(long long n, long long t) {
    check_even_domain(n, t);
    auto [delta, eps] = delta_eps(t);
    // The schedule values are doubles; converting to rationals keeps the
    // subsequent comparison against max_delta_exact exact.
    return (Rational(eps) + Rational(delta)) * t * Rational(big_binom(n, t));
}

NonGraphicCertificate make_certificate(long long t, long long n,
                                       const BigInt& d_min,
                                       const BigInt& d_max) {
    check_even_domain(n, t);
    if (d_min > d_max) throw std::invalid_argument("d_min > d_max");
    NonGraphicCertificate c;
    c.t = t;
    c.n = n;
    c.d_min = d_min;
    c.d_max = d_max;
    c.required_delta = BigInt(n / 2) * (d_max - d_min);
    c.max_delta = max_delta_exact(n, t);
    c.sound = c.required_delta > c.max_delta;
    return c;
}

NonGraphicCertificate nongraphic_witness(long long t, const Rational& p,
                                         long long n) {
    check_even_domain(n, t);
    if (!(p > 0 && p < 1)) throw std::invalid_argument("p must be in (0,1)");
    const Rational c(width_c(t));
    Rational lo = p - c;
    Rational hi = p + c;
    bool clipped = false;
    if (lo < 0) {
        lo = 0;
        clipped = true;
    }
    if (hi > 1) {
        hi = 1;
        clipped = true;
    }
    if (lo > hi) throw std::invalid_argument("empty band");

    const BigInt cap = big_binom(n - 1, t - 1);
    BigInt d_min = rational_ceil(lo * Rational(cap));
    BigInt d_max = rational_floor(hi * Rational(cap));
    if (d_min > d_max) throw std::invalid_argument("empty band after rounding");

    NonGraphicCertificate out = make_certificate(t, n, d_min, d_max);
    out.p = p;
    out.clipped = clipped;
    return out;
}

}  // namespace hg3
