#pragma once

// Adaptive definite integration (Gauss-Kronrod 7/15 embedded pair with
// interval bisection) plus the special values needed by the application
// checks: the sine integral Si, the Catalan constant, and the enclosure
// computations around them.

#include <functional>
#include <string>
#include <vector>

#include "sincbounds/core.hpp"

namespace sincbounds {

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    long evaluations = 0;
    bool converged = false;
};

/// Integrates f over [a,b] to the requested absolute tolerance. Integrands
/// must be bounded; removable singularities are the caller's problem.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol);

/// Si(x) = integral of sinc over [0,x], via the alternating series
/// sum (-1)^n x^{2n+1} / ((2n+1)(2n+1)!). Accepts x in [0, 10].
double si(double x);

/// Same series in an arbitrary real type (terms added until negligible).
template <class Real>
Real si_series(Real x) {
    Real term = x;
    Real sum = x;
    const Real x2 = x * x;
    for (int n = 1; n < 200; ++n) {
        term *= -x2 / Real((2 * n) * (2 * n + 1));
        const Real contrib = term / Real(2 * n + 1);
        const Real next = sum + contrib;
        if (next == sum) break;
        sum = next;
    }
    return sum;
}

/// The Catalan constant. A stored literal, validated once against the
/// Euler-accelerated defining series and the integral representation
/// (1/2) * integral of x/sin x over [0, pi/2].
double catalan_reference();

/// x / sin x with the removable singularity at 0 patched by its even series.
double inv_sinc(double x);

struct A1Enclosure {
    double p = 0;
    double lower = 0;    // (2/pi)^p (1/p) tan(p pi/2)
    double upper = 0;    // (1/p) sin(p pi/2)
    QuadratureResult integral; // integral of sinc^p over [0, pi/2]
    bool reversed = false;     // p in [1/2,1]: upper < integral < lower
    bool ordering_holds = false;
};

/// Closed-form endpoints and quadrature value for the integral of sinc^p
/// over [0, pi/2]. p must lie in (0,1/3] or [1/2,1]; nothing is claimed in
/// the gap. At p=1 the reversed lower endpoint diverges and only the
/// one-sided check upper < integral is performed.
A1Enclosure a1_enclosure(double p, double tol = 1e-12);

struct EnclosureCheck {
    std::string name;
    double lower = 0;
    double reference = 0;
    double upper = 0;
    bool holds = false;
};

/// Verifies the Si(pi/2) enclosure and both Catalan-constant enclosures,
/// including that the Si enclosure improves on the earlier
/// (92-pi^2)/60 < Si(pi/2) < (8+4pi)/15 one.
std::vector<EnclosureCheck> application_enclosures();

struct TwoSided {
    double lhs = 0;
    double rhs = 0;
};

/// Both sides of (sin 2x + sin x)/(3x) < ((cos x + 1)/2)^2 on (0, pi/2).
TwoSided mb41_check(double x);

} // namespace sincbounds
