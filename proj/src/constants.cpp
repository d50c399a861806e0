#include "sincbounds/constants.hpp"

#include <cmath>

namespace sincbounds {

namespace {

double ulp_of(double v) {
    return std::nextafter(std::fabs(v), INFINITY) - std::fabs(v);
}

} // namespace

RootResult solve_p0(double tol) {
    if (!(tol > 0.0) || tol > 1e-6)
        throw DomainError("solve_p0 tolerance must lie in (0, 1e-6]");
    const double half_pi = pi_of<double>() / 2;
    auto f = [&](double p) { return f_p(p, half_pi); };

    RootResult r;
    double lo = 1.0 / 3.0, hi = 0.5;
    double flo = f(lo), fhi = f(hi);
    if (!(flo < 0.0) || !(fhi > 0.0))
        throw DomainError("solve_p0: no sign change in [1/3, 1/2]");
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    int iters = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        ++iters;
        if (fm < 0.0) { lo = mid; flo = fm; } else { hi = mid; fhi = fm; }
    }
    // Secant polishing inside the final bracket.
    double a = lo, b = hi, fa = flo, fb = fhi;
    for (int k = 0; k < 4 && fb != fa; ++k) {
        const double c = b - fb * (b - a) / (fb - fa);
        if (!(c > lo) || !(c < hi)) break;
        const double fc = f(c);
        ++iters;
        a = b; fa = fb;
        b = c; fb = fc;
        if (fc == 0.0) break;
    }
    r.value = b;
    r.residual = fb;
    r.iterations = iters;
    return r;
}

ConstantCatalogue catalogue() {
    const double pi = pi_of<double>();
    const double s3 = std::sqrt(3.0);
    ConstantCatalogue c;
    c.p0 = solve_p0().value;
    c.alpha = 2.0 * (std::log(pi) - std::log(2.0)) / (std::log(4.0) - std::log(3.0));
    c.beta_13_half = 16.0 * s3 / (9.0 * pi);
    c.beta_13_quarter = 16.0 * (3.0 * s3 - 5.0) / pi;
    c.beta_12_half = 4.0 / pi;
    c.a2_lower = (3.0 * s3 - 5.0) * (2.0 * pi + 9.0 * s3 + 22.0) / (2.0 * pi);
    c.a2_upper = (2.0 * pi + 9.0 * s3 + 22.0) / 32.0;
    c.a31_lower = (4.0 + 3.0 * std::log(3.0)) / 8.0;
    c.a31_upper = 3.0 * s3 * pi * (4.0 + 3.0 * std::log(3.0)) / 128.0;
    c.a32_lower = (8.0 * s3 / 9.0) * std::log(1.0 + s3) - (40.0 - 22.0 * s3) / 3.0;
    c.a32_upper = pi * ((9.0 + 5.0 * s3) / 36.0 * std::log(s3 + 1.0) -
                       (1.0 + 5.0 * s3) / 48.0);
    return c;
}

std::vector<ConsistencyEntry> consistency_check() {
    const ConstantCatalogue c = catalogue();
    const double pi = pi_of<double>();
    std::vector<ConsistencyEntry> out;
    auto add = [&out](const std::string& name, double closed, double recomputed,
                      double ulps) {
        const double d = std::fabs(closed - recomputed);
        out.push_back({name, d, d <= ulps * ulp_of(closed)});
    };
    add("beta_13_half", c.beta_13_half, beta(1.0 / 3.0, pi / 2), 8.0);
    add("beta_13_quarter", c.beta_13_quarter, beta(1.0 / 3.0, pi / 4), 8.0);
    add("beta_12_half", c.beta_12_half, beta(0.5, pi / 2), 8.0);
    // alpha is exactly the F_p endpoint value (ln2 - ln pi)/ln cos(pi/6).
    add("alpha", c.alpha, big_f_limit_half_pi(1.0 / 3.0), 8.0);
    // beta(p0, pi/2) = 1 restates the defining equation of p0.
    add("beta_p0_half", 1.0, beta(c.p0, pi / 2), 8.0);
    return out;
}

} // namespace sincbounds
