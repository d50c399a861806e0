#include "sincbounds/series.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace sincbounds {

namespace {

using boost::multiprecision::cpp_int;
using mp50 = boost::multiprecision::cpp_bin_float_50;

// Tangent numbers T_1..T_N via the integer triangle
// (tan x = sum T_n x^{2n-1}/(2n-1)!), then
// |B_{2n}| = T_n * 2n / (2^{2n} (2^{2n} - 1)).
std::array<double, series_max_terms + 1> make_bernoulli_table() {
    const int N = series_max_terms;
    std::vector<cpp_int> t(static_cast<size_t>(N) + 1);
    t[1] = 1;
    for (int k = 2; k <= N; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= N; ++k)
        for (int j = k; j <= N; ++j)
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];

    std::array<double, series_max_terms + 1> out{};
    for (int n = 1; n <= N; ++n) {
        const cpp_int pow4 = cpp_int(1) << (2 * n);
        const mp50 b = mp50(t[n]) * (2 * n) / (mp50(pow4) * mp50(pow4 - 1));
        out[static_cast<size_t>(n)] = static_cast<double>(b);
    }
    return out;
}

const std::array<double, series_max_terms + 1>& bernoulli_table() {
    static const auto table = make_bernoulli_table();
    return table;
}

void require_term_count(int N) {
    if (N < 1 || N > series_max_terms)
        throw DomainError("series term count must lie in [1, 60]");
}

// 2^{2n}/(2n)! |B_{2n}|, the cot-series coefficient.
double cot_coeff(int n) {
    double c = bernoulli_abs(n);
    for (int k = 1; k <= 2 * n; ++k) c *= 2.0 / k;
    return c;
}

// (2^{2n}-1)/(2n)! 2^{2n} |B_{2n}|, the tan-series coefficient.
double tan_coeff(int n) {
    return cot_coeff(n) * (std::exp2(2 * n) - 1.0);
}

} // namespace

double bernoulli_abs(int n) {
    if (n < 1 || n > series_max_terms)
        throw DomainError("bernoulli_abs defined for 1 <= n <= 60");
    return bernoulli_table()[static_cast<size_t>(n)];
}

SeriesTruncation cot_series(double x, int N) {
    require_term_count(N);
    if (x == 0.0 || !(std::fabs(x) < pi_of<double>()))
        throw DomainError("cot series requires 0 < |x| < pi");
    double sum = 1.0 / x;
    double xp = x; // x^{2n-1}
    const double x2 = x * x;
    for (int n = 1; n <= N; ++n) {
        sum -= cot_coeff(n) * xp;
        xp *= x2;
    }
    // Consecutive term ratios are below (x/pi)^2, so the tail is dominated
    // by a geometric series starting at the first omitted term.
    const double r = x2 / (pi_of<double>() * pi_of<double>());
    const double remainder = cot_coeff(N + 1 <= series_max_terms ? N + 1 : N) *
                             std::fabs(xp) / (1.0 - r);
    return {sum, N, remainder};
}

SeriesTruncation tan_series(double x, int N) {
    require_term_count(N);
    if (!(std::fabs(x) < pi_of<double>() / 2))
        throw DomainError("tan series requires |x| < pi/2");
    double sum = 0.0;
    double xp = x;
    const double x2 = x * x;
    for (int n = 1; n <= N; ++n) {
        sum += tan_coeff(n) * xp;
        xp *= x2;
    }
    // Term ratios are below (2x/pi)^2; geometric tail bound.
    const double r = 4.0 * x2 / (pi_of<double>() * pi_of<double>());
    const double remainder = tan_coeff(N + 1 <= series_max_terms ? N + 1 : N) *
                             std::fabs(xp) / (1.0 - r);
    return {sum, N, remainder};
}

SeriesTruncation fp_prime_series(double p, double x, int N) {
    require_term_count(N);
    detail::require_cos_power_domain(p, x);
    if (!(x > 0.0) || !(x < pi_of<double>() / 2))
        throw DomainError("fp_prime_series requires x in (0, pi/2)");
    double sum = 0.0;
    double xp = x;
    double pp = p; // p^{2n-1}
    const double x2 = x * x;
    const double p2 = p * p;
    for (int n = 1; n <= N; ++n) {
        sum += tan_coeff(n) * (pp - 1.0 / (std::exp2(2 * n) - 1.0)) * xp;
        xp *= x2;
        pp *= p2;
    }
    const int m = N + 1 <= series_max_terms ? N + 1 : N;
    const double r = 4.0 * x2 / (pi_of<double>() * pi_of<double>());
    const double remainder = tan_coeff(m) * (1.0 + std::pow(p, 2 * m - 1)) *
                             std::fabs(xp) / (1.0 - r);
    return {sum, N, remainder};
}

double fp_prime_direct(double p, double x) {
    detail::require_cos_power_domain(p, x);
    if (!(x > 0.0) || !(x < pi_of<double>() / 2))
        throw DomainError("fp_prime_direct requires x in (0, pi/2)");
    return (std::cos(x) / std::sin(x) - 1.0 / x) + std::tan(p * x);
}

double g_of(double n) {
    if (!(n > 0.5)) throw DomainError("g_of requires n > 1/2");
    // (2^{2n}-1)^{-1/(2n-1)} via expm1 to keep 2^{2n}-1 accurate for small n.
    const double t = std::expm1(2.0 * n * std::numbers::ln2);
    return std::exp(-std::log(t) / (2.0 * n - 1.0));
}

double ratio_step(double p, int n) {
    if (!(p > 0.0) || p > 1.0 || n < 1)
        throw DomainError("ratio_step requires p in (0,1] and n >= 1");
    // Rearranged as 2^{2n}(4p^2-1) + (1-p^2) to dodge the catastrophic
    // cancellation at p = 1/2, where the exact value is 3/4 * p^{2n-2}.
    const double bracket = std::exp2(2 * n) * (4.0 * p * p - 1.0) + (1.0 - p * p);
    return std::pow(p, 2 * n - 2) * bracket;
}

} // namespace sincbounds
