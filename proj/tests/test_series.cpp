#include <doctest.h>

#include <cmath>

#include "sincbounds/series.hpp"
#include "oracle.hpp"

using namespace sincbounds;

TEST_CASE("bernoulli_abs exact small values") {
    CHECK(bernoulli_abs(1) == oracle::b2);
    CHECK(bernoulli_abs(2) == oracle::b4);
    CHECK(bernoulli_abs(3) == doctest::Approx(1.0 / 42.0).epsilon(1e-16));
    CHECK(bernoulli_abs(5) == doctest::Approx(oracle::b10).epsilon(1e-16));
    CHECK_THROWS_AS(bernoulli_abs(0), DomainError);
    CHECK_THROWS_AS(bernoulli_abs(61), DomainError);
}

TEST_CASE("bernoulli_abs large values against the oracle") {
    CHECK(bernoulli_abs(10) == doctest::Approx(oracle::b20).epsilon(4e-16));
    CHECK(bernoulli_abs(15) == doctest::Approx(oracle::b30).epsilon(4e-16));
    CHECK(bernoulli_abs(30) == doctest::Approx(oracle::b60).epsilon(4e-16));
}

TEST_CASE("cot series matches direct evaluation at N=40") {
    for (double x : {0.1, 0.5, 1.0, 1.4}) {
        const SeriesTruncation s = cot_series(x, 40);
        CHECK(std::fabs(s.value - 1.0 / std::tan(x)) < 1e-12);
    }
    CHECK(cot_series(1.0, 40).value ==
          doctest::Approx(oracle::cot_1).epsilon(1e-14));
    CHECK(cot_series(1.4, 40).value ==
          doctest::Approx(oracle::cot_14).epsilon(1e-13));
}

TEST_CASE("tan series matches direct evaluation where it converges") {
    CHECK(std::fabs(tan_series(0.5, 40).value - oracle::tan_05) < 1e-14);
    CHECK(std::fabs(tan_series(1.0, 40).value - std::tan(1.0)) < 1e-12);
    // At 1.4 the convergence ratio is (1.4/(pi/2))^2 ~ 0.794 and 40 terms
    // only reach ~5e-4; the remainder bound must cover the actual error.
    const SeriesTruncation t = tan_series(1.4, 40);
    const double err = std::fabs(t.value - oracle::tan_14);
    CHECK(err > 1e-12); // genuinely slow, not a coding accident
    // The geometric tail bound is asymptotically tight here; allow rounding.
    CHECK(err <= t.remainder_bound * (1.0 + 1e-6));
}

TEST_CASE("remainder bounds cover the truncation error") {
    for (int N : {5, 10, 20}) {
        for (double x : {0.3, 0.9, 1.3}) {
            const SeriesTruncation c = cot_series(x, N);
            CHECK(std::fabs(c.value - 1.0 / std::tan(x)) <=
                  c.remainder_bound + 1e-15);
            const SeriesTruncation t = tan_series(x, N);
            CHECK(std::fabs(t.value - std::tan(x)) <=
                  t.remainder_bound + 1e-15);
        }
    }
}

TEST_CASE("fp_prime series vs direct") {
    for (double p : {0.1, 0.25, 1.0 / 3.0, 0.5, 1.0}) {
        for (double x : {0.2, 0.7, 1.2}) {
            const SeriesTruncation s = fp_prime_series(p, x, 40);
            // The truncation error at x = 1.2 is ~1e-9 with 40 terms; the
            // agreement requirement is "within the certified remainder".
            CHECK(std::fabs(s.value - fp_prime_direct(p, x)) <
                  std::max(1e-12, s.remainder_bound * (1.0 + 1e-6)));
        }
    }
    // Spot value: f'_{1/4}(1) = cot 1 - 1 + tan(1/4).
    CHECK(fp_prime_direct(0.25, 1.0) ==
          doctest::Approx(-0.10256546284463303).epsilon(1e-14));
}

TEST_CASE("fp_prime sign by regime") {
    for (double x : {0.3, 1.0, 1.5}) {
        for (double p : {0.1, 0.25, 1.0 / 3.0}) CHECK(fp_prime_direct(p, x) < 0);
        for (double p : {0.5, 0.75, 1.0})
            if (p * x < pi_of<double>() / 2) CHECK(fp_prime_direct(p, x) > 0);
    }
}

TEST_CASE("g_of endpoints and monotonicity") {
    CHECK(g_of(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(g_of(2.0) == doctest::Approx(oracle::g_2).epsilon(1e-15));
    double prev = g_of(1.0);
    for (int n = 2; n <= 30; ++n) {
        const double g = g_of(static_cast<double>(n));
        CHECK(g > prev);
        CHECK(g < 0.5);
        prev = g;
    }
}

TEST_CASE("ratio_step sign dichotomy straddling sqrt(5)/5") {
    // sqrt(5)/5 = 0.4472135..; below it every step is negative, at 1/2 and
    // above every step is positive.
    for (int n = 1; n <= 30; ++n) {
        CHECK(ratio_step(0.447213, n) < 0);
        CHECK(ratio_step(0.5, n) > 0);
    }
    // And the sign flips inside the gap for large n but not uniformly:
    // nothing is claimed for p in (sqrt(5)/5, 1/2); just check the formula.
    CHECK(ratio_step(0.45, 1) ==
          doctest::Approx(15 * 0.45 * 0.45 - 3).epsilon(1e-15));
}
