#pragma once

// The named sharp constants: the threshold exponent p0 (unique root of
// ln(2/pi) - (1/p) ln cos(pi p/2) on (1/3, 1/2)), the exponent
// alpha = 2(ln pi - ln 2)/(ln 4 - ln 3), the beta endpoint ratios, and the
// closed-form enclosure endpoints used by the applications.

#include <string>
#include <vector>

#include "sincbounds/core.hpp"

namespace sincbounds {

struct RootResult {
    double value = 0;
    double residual = 0;
    double bracket_lo = 0;
    double bracket_hi = 0;
    int iterations = 0;
};

struct ConstantCatalogue {
    double p0 = 0;
    double alpha = 0;
    double beta_13_half = 0;    // 16*sqrt(3)/(9*pi)
    double beta_13_quarter = 0; // 16*(3*sqrt(3)-5)/pi
    double beta_12_half = 0;    // 4/pi
    double a2_lower = 0, a2_upper = 0;
    double a31_lower = 0, a31_upper = 0;
    double a32_lower = 0, a32_upper = 0;
};

/// Solves f_p(pi/2) = 0 for p, bracketed in [1/3, 1/2]: bisection to width
/// tol, then secant polishing. tol must lie in (0, 1e-6].
RootResult solve_p0(double tol = 1e-13);

/// Same root in the 50-digit oracle type (default tol 1e-28).
template <class Real>
Real solve_p0_real(Real tol) {
    const Real half_pi = pi_of<Real>() / 2;
    Real lo = Real(1) / 3, hi = Real(1) / 2;
    Real flo = f_p(lo, half_pi);
    if (!(flo < Real(0)) || !(f_p(hi, half_pi) > Real(0)))
        throw DomainError("no sign change for p0 in [1/3, 1/2]");
    while (hi - lo > tol) {
        const Real mid = (lo + hi) / 2;
        const Real fm = f_p(mid, half_pi);
        if (fm < Real(0)) { lo = mid; flo = fm; } else { hi = mid; }
    }
    return (lo + hi) / 2;
}

ConstantCatalogue catalogue();

struct ConsistencyEntry {
    std::string name;
    double discrepancy = 0; // |closed form - recomputed|
    bool within_tolerance = false;
};

/// Recomputes each closed-form constant through an independent route
/// (beta(), the F_p endpoint formula) and reports the disagreements.
std::vector<ConsistencyEntry> consistency_check();

} // namespace sincbounds
