#pragma once

// Schwab-Borchardt and Seiffert means and the margin functions for the
// (4t^2-1) SB(t,1) <= 3t^3 and P < (3/4)(A+G)^2/(2G+A) inequalities.

#include "sincbounds/core.hpp"

namespace sincbounds {

/// SB(a,b): sqrt(b^2-a^2)/arccos(a/b) for a < b, a at a = b,
/// sqrt(a^2-b^2)/arccosh(a/b) for a > b. Requires a >= 0, b > 0.
/// Near the diagonal both branches are 0/0; a shared series in
/// eps = (b-a)/b takes over there.
double schwab_borchardt(double a, double b);

struct SeiffertTriple {
    double p = 0; // Seiffert mean
    double a = 0; // arithmetic mean
    double g = 0; // geometric mean
    double x = 0; // arcsin((a-b)/(a+b)); P/A = sinc(x), G/A = cos(x)
};

/// Seiffert, arithmetic and geometric means of a != b (both positive).
SeiffertTriple seiffert_triple(double a, double b);

/// 3t^3 - (4t^2-1) SB(t,1); nonnegative for t > 0 with equality only at t=1.
double a4_margin(double t);

/// (3/4)(A+G)^2/(2G+A) - P; strictly positive for a != b.
double a5_margin(double a, double b);

} // namespace sincbounds
