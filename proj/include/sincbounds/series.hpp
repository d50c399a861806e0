#pragma once

// Bernoulli-number generation and the cot/tan power-series machinery,
// plus the coefficient-level quantities behind the monotonicity proofs:
// the g(n) = (2^{2n}-1)^{-1/(2n-1)} threshold function and the
// b_{n+1}/a_{n+1} - b_n/a_n ratio step.

#include <utility>

#include "sincbounds/core.hpp"

namespace sincbounds {

inline constexpr int series_max_terms = 60;

struct SeriesTruncation {
    double value = 0;
    int truncation_index = 0;
    double remainder_bound = 0;
};

/// |B_{2n}| for 1 <= n <= 60. Generated once from the exact integer
/// tangent-number triangle, then rounded to binary64.
double bernoulli_abs(int n);

/// Partial sum of cot x = 1/x - sum_{n=1..N} (2^{2n}/(2n)!) |B_{2n}| x^{2n-1},
/// valid for 0 < |x| < pi, with a geometric tail bound.
SeriesTruncation cot_series(double x, int N);

/// Partial sum of tan x = sum_{n=1..N} ((2^{2n}-1)/(2n)!) 2^{2n} |B_{2n}| x^{2n-1},
/// valid for |x| < pi/2, with a geometric tail bound.
SeriesTruncation tan_series(double x, int N);

/// Partial sum of f_p'(x) = (cot x - 1/x) + tan px rearranged as
/// sum ((2^{2n}-1) 2^{2n}/(2n)!) |B_{2n}| (p^{2n-1} - 1/(2^{2n}-1)) x^{2n-1}.
SeriesTruncation fp_prime_series(double p, double x, int N);

/// Direct evaluation (cot x - 1/x) + tan px, for cross-checks.
double fp_prime_direct(double p, double x);

/// g(n) = (2^{2n}-1)^{-1/(2n-1)}, increasing on (1/2, inf) from g(1)=1/3
/// toward the limit 1/2.
double g_of(double n);

/// (2^{2n+2}-1) p^{2n} - (2^{2n}-1) p^{2n-2}; nonpositive for all n >= 1
/// when p^2 < 1/5 and positive when p^2 >= 1/4.
double ratio_step(double p, int n);

} // namespace sincbounds
