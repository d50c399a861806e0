#include <doctest.h>

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sincbounds/constants.hpp"
#include "oracle.hpp"

using namespace sincbounds;
using mp50 = boost::multiprecision::cpp_bin_float_50;

TEST_CASE("p0 matches the published digits") {
    const RootResult r = solve_p0(1e-13);
    // All twelve published digits: the true value is 0.34730724546488...,
    // so compare by truncation rather than distance.
    CHECK(std::floor(r.value * 1e12) == 347307245464.0);
    CHECK(std::fabs(r.value - oracle::p0) < 1e-14);
    CHECK(std::fabs(r.residual) <= 1e-12);
    CHECK(r.bracket_lo == doctest::Approx(1.0 / 3.0));
    CHECK(r.bracket_hi == 0.5);
    CHECK(r.iterations > 0);
}

TEST_CASE("solve_p0 rejects bad tolerances") {
    CHECK_THROWS_AS(solve_p0(0.0), DomainError);
    CHECK_THROWS_AS(solve_p0(-1e-13), DomainError);
    CHECK_THROWS_AS(solve_p0(1e-3), DomainError);
}

TEST_CASE("p0 in 50-digit arithmetic agrees") {
    const mp50 p0 = solve_p0_real<mp50>(mp50(1e-28));
    CHECK(std::fabs(static_cast<double>(p0) - oracle::p0) < 1e-15);
    // The defining equation holds to the oracle tolerance.
    CHECK(static_cast<double>(abs(f_p(p0, pi_of<mp50>() / 2))) < 1e-27);
}

TEST_CASE("catalogue closed forms") {
    const ConstantCatalogue c = catalogue();
    CHECK(c.alpha == doctest::Approx(oracle::alpha).epsilon(1e-15));
    CHECK(c.beta_13_half == doctest::Approx(oracle::beta_13_half).epsilon(1e-15));
    CHECK(c.beta_13_quarter ==
          doctest::Approx(oracle::beta_13_quarter).epsilon(1e-15));
    CHECK(c.beta_12_half == doctest::Approx(oracle::beta_12_half).epsilon(1e-15));
    CHECK(c.a2_lower == doctest::Approx(oracle::a2_lower).epsilon(1e-15));
    CHECK(c.a2_upper == doctest::Approx(oracle::a2_upper).epsilon(1e-15));
    CHECK(c.a31_lower == doctest::Approx(oracle::a31_lower).epsilon(1e-15));
    CHECK(c.a31_upper == doctest::Approx(oracle::a31_upper).epsilon(1e-15));
    CHECK(c.a32_lower == doctest::Approx(oracle::a32_lower).epsilon(1e-15));
    CHECK(c.a32_upper == doctest::Approx(oracle::a32_upper).epsilon(1e-15));
}

TEST_CASE("decimal prefixes match the published values") {
    const ConstantCatalogue c = catalogue();
    CHECK(std::floor(c.beta_13_half * 1e5) == 98014.0);
    CHECK(std::floor(c.beta_13_quarter * 1e5) == 99899.0);
    // 0.99900 prefix after rounding to 5 places.
    CHECK(std::round(c.beta_13_quarter * 1e5) == 99900.0);
}

TEST_CASE("consistency check is clean") {
    for (const ConsistencyEntry& e : consistency_check()) {
        INFO(e.name << " discrepancy " << e.discrepancy);
        CHECK(e.within_tolerance);
    }
}

TEST_CASE("beta relative agreement with closed forms to 1e-12") {
    const double pi = pi_of<double>();
    CHECK(std::fabs(beta(1.0 / 3.0, pi / 2) / oracle::beta_13_half - 1.0) < 1e-12);
    CHECK(std::fabs(beta(0.5, pi / 2) / oracle::beta_12_half - 1.0) < 1e-12);
}
