#include <cmath>

#include "doctest.h"
#include "hg3/asymptotic.hpp"

using namespace hg3;

TEST_CASE("width constant") {
    CHECK(width_c0() ==
          doctest::Approx(std::cbrt(2.0) + 1 / std::cbrt(4.0)).epsilon(1e-15));
    CHECK(width_c0() == doctest::Approx(1.8898815748).epsilon(1e-9));
}

TEST_CASE("width_c scales as t^(-1/3) and sits above the threshold") {
    CHECK(width_c(8) == doctest::Approx(width_c0() * 1.001 / 2).epsilon(1e-12));
    CHECK(width_c(8, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (long long t : {2, 8, 27, 64, 1000}) {
        CHECK(width_c(t) > width_c0() * std::pow(t, -1.0 / 3.0));
        CHECK(width_c(8 * t) ==
              doctest::Approx(width_c(t) / 2).epsilon(1e-12));
    }
}

TEST_CASE("delta/eps schedule") {
    auto [delta, eps] = delta_eps(2);
    CHECK(delta == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eps == doctest::Approx(0.5).epsilon(1e-14));
    for (long long t : {2, 3, 10, 64, 729}) {
        auto [d, e] = delta_eps(t);
        CHECK(d * d * e * t == doctest::Approx(1.0).epsilon(1e-12));
        // eps + delta = C0 * t^(-1/3) exactly; width_c's default C is
        // inflated by 1e-3 precisely so the schedule fits strictly inside.
        CHECK(d + e ==
              doctest::Approx(width_c0() * std::pow(t, -1.0 / 3.0))
                  .epsilon(1e-12));
        CHECK(d + e < width_c(t));
    }
}

TEST_CASE("hypergeometric tail, exact") {
    // k ~ Hyp(6, 3, 3): probabilities (1, 9, 9, 1)/20 for k = 0..3.
    // |2k - 3| is 3 or 1, never > 3, so the delta = 1 tail is empty.
    CHECK(hypergeom_tail_exact(6, 3, Rational(1)) == Rational(0));
    // delta = 2/3: only |2k-3| = 3 > 2 survives, k in {0,3}.
    CHECK(hypergeom_tail_exact(6, 3, Rational(2, 3)) == Rational(2, 20));
    // delta = 0: everything but |2k-3| = 0 (impossible for odd t) counts.
    CHECK(hypergeom_tail_exact(6, 3, Rational(0)) == Rational(1));
}

TEST_CASE("tail is monotone decreasing in delta") {
    Rational prev(2);
    for (int num = 0; num <= 10; ++num) {
        Rational tail = hypergeom_tail_exact(12, 6, Rational(num, 10));
        CHECK(tail <= prev);
        prev = tail;
    }
}

TEST_CASE("exact tail <= tight Chebyshev <= simple Chebyshev") {
    for (long long n : {6, 8, 12, 20}) {
        for (long long t = 2; t <= n; t += 3) {
            for (int num = 2; num <= 12; num += 2) {
                Rational delta(num, 10);
                Rational tail = hypergeom_tail_exact(n, t, delta);
                ChebyshevBounds b = chebyshev_bound(n, t, delta);
                CHECK(tail <= b.tight);
                CHECK(b.tight <= b.simple);
            }
        }
    }
}

TEST_CASE("max_delta_exact small values and symmetry") {
    CHECK(max_delta_exact(4, 2) == BigInt(2));
    CHECK(max_delta_exact(6, 3) == BigInt(12));
    // t1+t2 = t with t1 > t2 needs t1 <= n/2; all mass fits either way.
    CHECK(max_delta_exact(8, 2) == BigInt(choose2(4) * 2));
}

TEST_CASE("paper bound dominates the exact maximum") {
    for (long long n : {10, 20, 50}) {
        for (long long t : {2, 3, 5}) {
            CHECK(paper_delta_bound(n, t) >= Rational(max_delta_exact(n, t)));
        }
    }
}

TEST_CASE("counting certificate for (10,10,10,0,0,0)-style bands") {
    NonGraphicCertificate c = make_certificate(3, 6, BigInt(0), BigInt(10));
    CHECK(c.required_delta == BigInt(30));
    CHECK(c.max_delta == BigInt(12));
    CHECK(c.sound);
}

TEST_CASE("an unsound certificate claims nothing") {
    // n = 4, t = 2, band (0,1): required 2 equals max_delta 2, no strict gap.
    NonGraphicCertificate c = make_certificate(2, 4, BigInt(0), BigInt(1));
    CHECK(c.required_delta == BigInt(2));
    CHECK(c.max_delta == BigInt(2));
    CHECK_FALSE(c.sound);
}

TEST_CASE("nongraphic_witness clips wide bands and flags it") {
    // c(2) > 1, so any p gives a clipped band.
    NonGraphicCertificate c = nongraphic_witness(2, Rational(1, 2), 6);
    CHECK(c.clipped);
    CHECK(c.d_min == BigInt(0));
    // At t = 64 the width c(t) < 1/2 and p = 1/2 stays interior.
    NonGraphicCertificate w = nongraphic_witness(64, Rational(1, 2), 128);
    CHECK_FALSE(w.clipped);
    CHECK(w.d_min > 0);
    CHECK(Rational(w.d_max) < Rational(big_binom(127, 63)));
}

TEST_CASE("nongraphic_witness input validation") {
    CHECK_THROWS_AS(nongraphic_witness(3, Rational(1, 2), 7),
                    std::invalid_argument);  // odd n
    CHECK_THROWS_AS(nongraphic_witness(8, Rational(1, 2), 6),
                    std::invalid_argument);  // n < t
    CHECK_THROWS_AS(nongraphic_witness(3, Rational(2), 8),
                    std::invalid_argument);  // p outside (0,1)
}
