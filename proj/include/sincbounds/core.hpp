#pragma once

// Evaluators for sinc(x) = sin(x)/x, the cos-power bound families
// (cos px)^{1/p}, the logarithmic difference f_p and ratio F_p, and the
// closed-form bound expressions used by the verifier.
//
// Everything is templated on the working real type so the same code runs
// in binary64 and in the 50-digit oracle type used for cross-checks.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/math/constants/constants.hpp>

namespace sincbounds {

template <class Real>
inline Real pi_of() {
    return boost::math::constants::pi<Real>();
}

// Below this |x| the removable-singularity expressions switch to their
// truncated Taylor series (2^-10; see PrecisionConfig).
inline constexpr double default_small_x_threshold = 0x1p-10;

enum class PrecisionMode { working, oracle };

struct PrecisionConfig {
    PrecisionMode mode = PrecisionMode::working;
    int oracle_digits = 50;
    double small_x_threshold = default_small_x_threshold;
    double margin_floor = 0x1p-40; // relative
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

template <class Real>
Real sinc_series(Real x) {
    // 1 - x^2/6 + x^4/120 - ...; terms added until they stop mattering.
    const Real x2 = x * x;
    Real term = Real(1);
    Real sum = Real(1);
    for (int k = 1; k < 64; ++k) {
        term *= -x2 / Real((2 * k) * (2 * k + 1));
        const Real next = sum + term;
        if (next == sum) break;
        sum = next;
    }
    return sum;
}

// ln(sin x / x) = -x^2/6 - x^4/180 - x^6/2835 - x^8/37800 - ...
template <class Real>
Real log_sinc_series(Real x) {
    const Real x2 = x * x;
    return -x2 / Real(6) - x2 * x2 / Real(180) - x2 * x2 * x2 / Real(2835)
           - x2 * x2 * x2 * x2 / Real(37800);
}

// ln cos y = -y^2/2 - y^4/12 - y^6/45 - 17 y^8/2520 - ...
template <class Real>
Real log_cos_series(Real y) {
    const Real y2 = y * y;
    return -y2 / Real(2) - y2 * y2 / Real(12) - y2 * y2 * y2 / Real(45)
           - Real(17) * y2 * y2 * y2 * y2 / Real(2520);
}

template <class Real>
void require_cos_power_domain(Real p, Real x) {
    if (!(p > Real(0)) || p > Real(1))
        throw DomainError("cos-power exponent p must lie in (0,1]");
    using std::fabs;
    if (!(fabs(p * x) < pi_of<Real>() / 2))
        throw DomainError("cos-power bound undefined: |p*x| >= pi/2");
}

} // namespace detail

/// sin(x)/x with the removable singularity filled in; total on finite input.
template <class Real>
Real sinc(Real x) {
    using std::fabs;
    using std::sin;
    if (fabs(x) < Real(default_small_x_threshold)) return detail::sinc_series(x);
    return sin(x) / x;
}

/// (cos px)^{1/p} computed as exp((1/p) ln cos px). Requires p in (0,1]
/// and |p*x| < pi/2.
template <class Real>
Real cos_power(Real p, Real x) {
    detail::require_cos_power_domain(p, x);
    if (x == Real(0)) return Real(1);
    using std::cos;
    using std::exp;
    using std::log;
    return exp(log(cos(p * x)) / p);
}

/// f_p(x) = ln(sin x / x) - (1/p) ln cos px. Decreasing in x for
/// p in (0,1/3], increasing for p in [1/2,1]; f_p(0) = 0.
template <class Real>
Real f_p(Real p, Real x) {
    detail::require_cos_power_domain(p, x);
    using std::fabs;
    if (fabs(x) < Real(default_small_x_threshold)) {
        // (p/2 - 1/6) x^2 + (p^3/12 - 1/180) x^4 + (p^5/45 - 1/2835) x^6
        const Real x2 = x * x;
        const Real p2 = p * p;
        const Real c2 = p / 2 - Real(1) / 6;
        const Real c4 = p * p2 / 12 - Real(1) / 180;
        const Real c6 = p * p2 * p2 / 45 - Real(1) / 2835;
        return x2 * (c2 + x2 * (c4 + x2 * c6));
    }
    using std::cos;
    using std::log;
    return log(sinc(x)) - log(cos(p * x)) / p;
}

/// F_p(x) = ln(sin x / x) / ln cos px on (0, pi/2); tends to 1/(3p^2) at 0.
template <class Real>
Real big_f(Real p, Real x) {
    detail::require_cos_power_domain(p, x);
    if (x == Real(0))
        throw DomainError("F_p is not defined at x=0; use big_f_limit_zero");
    using std::fabs;
    // The direct quotient loses ~7 digits near 0 (both logs vanish like
    // x^2), which is enough to break monotonicity scans for small p; the
    // series ratio is clean out to 0.05.
    if (fabs(x) < Real(0.05))
        return detail::log_sinc_series(x) / detail::log_cos_series(p * x);
    using std::cos;
    using std::log;
    return log(sinc(x)) / log(cos(p * x));
}

/// F_p(0+) = 1/(3p^2).
template <class Real>
Real big_f_limit_zero(Real p) {
    return Real(1) / (3 * p * p);
}

/// F_p(pi/2-) = (ln 2 - ln pi) / ln cos(pi p / 2).
template <class Real>
Real big_f_limit_half_pi(Real p) {
    using std::cos;
    using std::log;
    const Real pi = pi_of<Real>();
    return (log(Real(2)) - log(pi)) / log(cos(pi * p / 2));
}

/// The sharp endpoint ratio beta_p(c) = sinc(c) * (cos pc)^{-1/p} = exp(f_p(c)).
template <class Real>
Real beta(Real p, Real c) {
    if (!(c > Real(0)) || c > pi_of<Real>() / 2)
        throw DomainError("beta requires c in (0, pi/2]");
    detail::require_cos_power_domain(p, c);
    using std::cos;
    using std::exp;
    using std::log;
    return sinc(c) * exp(-log(cos(p * c)) / p);
}

/// (sinh u / u, cosh^3(u/3)) for u >= 0; the first stays strictly below the
/// second for u > 0 (Lin's inequality in hyperbolic form).
template <class Real>
std::pair<Real, Real> sinhc_and_bound(Real u) {
    if (u < Real(0)) throw DomainError("sinhc_and_bound requires u >= 0");
    using std::cosh;
    using std::sinh;
    Real s;
    if (u < Real(default_small_x_threshold)) {
        const Real u2 = u * u;
        s = Real(1) + u2 / 6 + u2 * u2 / 120 + u2 * u2 * u2 / 5040;
    } else {
        s = sinh(u) / u;
    }
    const Real c = cosh(u / 3);
    return {s, c * c * c};
}

// ---------------------------------------------------------------------------
// Closed-form bound expressions (working precision).

enum class BoundKind {
    Sinc,            // sin(x)/x
    CosPower,        // (cos px)^{1/p}
    ScaledCosPower,  // beta_p(c) * (cos px)^{1/p}
    QiLower,         // cos^2(x/2)
    KlenUpper3,      // cos^3(x/3)
    TwoPlusCosOver3, // (2 + cos x)/3
    Mb4Rational,     // (3/4)(cos x + 1)^2 / (2 cos x + 1)
    ThreeCosCubed,   // 3 cos^3 x
    ConstantTwoOverPi,
    CosPowerAlpha,   // (cos(x/3))^alpha
};

struct BoundExpr {
    BoundKind kind = BoundKind::Sinc;
    double p = 0;     // CosPower, ScaledCosPower
    double c = 0;     // ScaledCosPower
    double alpha = 0; // CosPowerAlpha

    static BoundExpr sinc_expr() { return {BoundKind::Sinc}; }
    static BoundExpr cos_pow(double p) { return {BoundKind::CosPower, p}; }
    static BoundExpr scaled_cos_pow(double p, double c) {
        return {BoundKind::ScaledCosPower, p, c};
    }
    static BoundExpr qi_lower() { return {BoundKind::QiLower}; }
    static BoundExpr klen_upper3() { return {BoundKind::KlenUpper3}; }
    static BoundExpr two_plus_cos_over3() { return {BoundKind::TwoPlusCosOver3}; }
    static BoundExpr mb4_rational() { return {BoundKind::Mb4Rational}; }
    static BoundExpr three_cos_cubed() { return {BoundKind::ThreeCosCubed}; }
    static BoundExpr constant_two_over_pi() { return {BoundKind::ConstantTwoOverPi}; }
    static BoundExpr cos_pow_alpha(double alpha) {
        return {BoundKind::CosPowerAlpha, 0, 0, alpha};
    }
};

double eval_bound(const BoundExpr& expr, double x);

/// Parses the CLI spelling of a bound family ("sinc", "cos-power", "qi", ...).
BoundExpr parse_bound_selector(const std::string& name, double p, double c,
                               double alpha);

} // namespace sincbounds
