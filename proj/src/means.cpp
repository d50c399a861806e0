#include "sincbounds/means.hpp"

#include <cmath>

namespace sincbounds {

double schwab_borchardt(double a, double b) {
    if (!(a >= 0.0) || !(b > 0.0))
        throw DomainError("schwab_borchardt requires a >= 0, b > 0");
    const double eps = (b - a) / b;
    if (std::fabs(eps) < 1e-6) {
        // sinc(arccos(1-eps)) = 1 - eps/3 - eps^2/45 - eps^3/189 + ...
        // analytic across the diagonal (negative eps is the arccosh branch).
        return b * (1.0 - eps / 3.0 - eps * eps / 45.0 -
                    eps * eps * eps / 189.0);
    }
    if (a < b)
        return std::sqrt(b * b - a * a) / std::acos(a / b);
    return std::sqrt(a * a - b * b) / std::acosh(a / b);
}

SeiffertTriple seiffert_triple(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || a == b)
        throw DomainError("seiffert_triple requires a, b > 0 with a != b");
    SeiffertTriple t;
    t.a = 0.5 * (a + b);
    t.g = std::sqrt(a * b);
    t.x = std::asin((a - b) / (a + b));
    t.p = (a - b) / (2.0 * t.x);
    t.x = std::fabs(t.x);
    return t;
}

double a4_margin(double t) {
    if (!(t > 0.0)) throw DomainError("a4_margin requires t > 0");
    return 3.0 * t * t * t - (4.0 * t * t - 1.0) * schwab_borchardt(t, 1.0);
}

double a5_margin(double a, double b) {
    const SeiffertTriple t = seiffert_triple(a, b);
    const double s = t.a + t.g;
    return 0.75 * s * s / (2.0 * t.g + t.a) - t.p;
}

} // namespace sincbounds
