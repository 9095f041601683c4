#ifndef HG3_ASYMPTOTIC_HPP
#define HG3_ASYMPTOTIC_HPP

#include <utility>

#include "hg3/common.hpp"

namespace hg3 {

/// C0 = 2^(1/3) + 4^(-1/3), the threshold constant of the t-uniform width
/// bound; any C > C0 is admissible.
double width_c0();

/// c(t) = C * t^(-1/3). Default C is C0 scaled up by 1e-3.
double width_c(long long t);
double width_c(long long t, double big_c);

/// The schedule delta = (t/2)^(-1/3), eps = (4t)^(-1/3). Always satisfies
/// delta^2 * eps * t = 1 exactly, hence delta >= (eps*t)^(-1/2).
std::pair<double, double> delta_eps(long long t);

/// Exact tail Pr[|2k - t| > delta*t] of k ~ Hyp(2m, m, t) with m = n/2.
/// delta enters only through the exact comparison |2k-t| > delta*t.
Rational hypergeom_tail_exact(long long n, long long t, const Rational& delta);

/// Chebyshev bounds on the same tail: `simple` = 1/(delta^2 t) (the proof's
/// final form) and `tight` = 4*Var/(delta^2 t^2) with the exact variance
/// Var = (t/4)(2m-t)/(2m-1).
struct ChebyshevBounds {
    Rational tight;
    Rational simple;
};

ChebyshevBounds chebyshev_bound(long long n, long long t,
                                const Rational& delta);

/// Exact maximum of Delta = sum over edges of (#endpoints in one half minus
/// #endpoints in the other), over all t-uniform hypergraphs on n vertices
/// split into equal halves: sum over t1 > t2, t1 + t2 = t of
/// C(n/2,t1)*C(n/2,t2)*(t1-t2).
BigInt max_delta_exact(long long n, long long t);

/// The paper's probabilistic bound (eps + delta) * t * C(n,t) under the
/// delta_eps schedule, as a rational upper reference for max_delta_exact.
Rational paper_delta_bound(long long n, long long t);

/// Exact counting witness that the half d_min / half d_max sequence is not
/// graphic: a t-uniform realization would need Delta = (n/2)(d_max - d_min)
/// but Delta <= max_delta_exact always.
struct NonGraphicCertificate {
    long long t = 0;
    long long n = 0;
    Rational p;
    BigInt d_min;
    BigInt d_max;
    BigInt required_delta;  // (n/2) * (d_max - d_min)
    BigInt max_delta;       // max_delta_exact(n, t)
    bool sound = false;     // required_delta > max_delta
    bool clipped = false;   // band clipped into [0, 1]
};

/// Certificate from explicit band endpoints (test fixtures).
NonGraphicCertificate make_certificate(long long t, long long n,
                                       const BigInt& d_min,
                                       const BigInt& d_max);

/// Certificate for the paper's band: d_min = ceil((p-c(t))*C(n-1,t-1)),
/// d_max = floor((p+c(t))*C(n-1,t-1)), clipped into [0,1] with a warning
/// flag. n must be even and >= t.
NonGraphicCertificate nongraphic_witness(long long t, const Rational& p,
                                         long long n);

}  // namespace hg3

#endif
