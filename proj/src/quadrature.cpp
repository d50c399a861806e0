#include "sincbounds/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sincbounds/constants.hpp"

namespace sincbounds {

namespace {

// 15-point Kronrod nodes on [0,1] with the embedded 7-point Gauss rule.
// Even-indexed nodes carry Gauss weights.
constexpr int gk_n = 8;
constexpr double gk_nodes[gk_n] = {
    0.0,
    0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
    0.7415311855993944, 0.8648644233597691, 0.9491079123427585,
    0.9914553711208126,
};
constexpr double gk_wk[gk_n] = {
    0.2094821410847278,
    0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
    0.1406532597155259, 0.1047900103222502, 0.0630920926299786,
    0.0229353220105292,
};
constexpr double gk_wg[gk_n] = {
    0.4179591836734694,
    0.0, 0.3818300505051189, 0.0,
    0.2797053914892767, 0.0, 0.1294849661688697,
    0.0,
};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b,
                 long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double k15 = gk_wk[0] * f0;
    double g7 = gk_wg[0] * f0;
    ++evals;
    for (int i = 1; i < gk_n; ++i) {
        const double dx = half * gk_nodes[i];
        const double fi = f(mid + dx) + f(mid - dx);
        evals += 2;
        k15 += gk_wk[i] * fi;
        g7 += gk_wg[i] * fi;
    }
    k15 *= half;
    g7 *= half;
    const double d = 200.0 * std::fabs(k15 - g7);
    return {k15, d * std::sqrt(d)};
}

constexpr long max_panels = 4096;

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol) {
    if (!(a < b)) throw DomainError("integrate requires a < b");
    if (!(tol > 0.0)) throw DomainError("integrate requires tol > 0");

    struct Panel {
        double a, b;
        PanelResult r;
    };

    QuadratureResult out;
    std::vector<Panel> done;
    std::vector<Panel> work;
    work.push_back({a, b, gk15(f, a, b, out.evaluations)});

    long panels = 1;
    while (!work.empty()) {
        Panel p = work.back();
        work.pop_back();
        // Per-panel error budget proportional to panel length.
        const double budget = tol * (p.b - p.a) / (b - a);
        if (p.r.error <= budget || panels >= max_panels) {
            done.push_back(p);
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        Panel right{mid, p.b, gk15(f, mid, p.b, out.evaluations)};
        Panel left{p.a, mid, gk15(f, p.a, mid, out.evaluations)};
        panels += 1;
        work.push_back(right);
        work.push_back(left); // processed first: left-to-right refinement
    }

    // Fixed-order reduction: sum by ascending left endpoint.
    std::sort(done.begin(), done.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0, err = 0;
    for (const Panel& p : done) {
        value += p.r.value;
        err += p.r.error;
    }
    out.value = value;
    out.error_estimate = err;
    out.converged = err <= tol && panels < max_panels;
    return out;
}

double si(double x) {
    if (!(x >= 0.0) || x > 10.0)
        throw DomainError("si accepts x in [0, 10]");
    return si_series(x);
}

double inv_sinc(double x) {
    if (std::fabs(x) < default_small_x_threshold) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 + 7.0 * x2 * x2 / 360.0 +
               31.0 * x2 * x2 * x2 / 15120.0;
    }
    return x / std::sin(x);
}

namespace {

// Cohen-Villegas-Zagier acceleration of sum (-1)^n a_n.
double accelerated_alternating(int n, const std::function<double(int)>& a) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
    }
    return s / d;
}

double validated_catalan() {
    constexpr double literal = 0.9159655941772190;
    const double accel = accelerated_alternating(
        30, [](int k) { return 1.0 / ((2.0 * k + 1) * (2.0 * k + 1)); });
    if (std::fabs(accel - literal) > 1e-13)
        throw std::logic_error("Catalan literal disagrees with its series");
    const QuadratureResult q =
        integrate([](double x) { return inv_sinc(x); }, 0.0,
                  pi_of<double>() / 2, 1e-12);
    if (std::fabs(0.5 * q.value - literal) > 1e-10)
        throw std::logic_error("Catalan literal disagrees with its integral");
    return literal;
}

} // namespace

double catalan_reference() {
    static const double k = validated_catalan();
    return k;
}

A1Enclosure a1_enclosure(double p, double tol) {
    const bool low_range = p > 0.0 && p <= 1.0 / 3.0;
    const bool high_range = p >= 0.5 && p <= 1.0;
    if (!low_range && !high_range)
        throw DomainError(
            "a1_enclosure: p must lie in (0,1/3] or [1/2,1]; nothing is "
            "claimed in the gap");
    const double pi = pi_of<double>();
    A1Enclosure e;
    e.p = p;
    e.reversed = high_range;
    e.upper = std::sin(p * pi / 2) / p;
    e.lower = p == 1.0 ? INFINITY
                       : std::pow(2.0 / pi, p) * std::tan(p * pi / 2) / p;
    e.integral =
        integrate([p](double x) { return std::pow(sinc(x), p); }, 0.0, pi / 2,
                  tol);
    const double v = e.integral.value;
    e.ordering_holds = e.reversed ? (e.upper < v && v < e.lower)
                                  : (e.lower < v && v < e.upper);
    return e;
}

std::vector<EnclosureCheck> application_enclosures() {
    const ConstantCatalogue c = catalogue();
    const double pi = pi_of<double>();
    std::vector<EnclosureCheck> out;

    const double si_half_pi = si(pi / 2);
    out.push_back({"si-enclosure", c.a2_lower, si_half_pi, c.a2_upper,
                   c.a2_lower < si_half_pi && si_half_pi < c.a2_upper});

    const double wu_lower = (92.0 - pi * pi) / 60.0;
    const double wu_upper = (8.0 + 4.0 * pi) / 15.0;
    out.push_back({"si-tighter-than-wu", wu_lower, si_half_pi, wu_upper,
                   wu_lower < c.a2_lower && c.a2_upper < wu_upper});

    const double k = catalan_reference();
    out.push_back({"catalan-enclosure-coarse", c.a31_lower, k, c.a31_upper,
                   c.a31_lower < k && k < c.a31_upper});
    out.push_back({"catalan-enclosure-fine", c.a32_lower, k, c.a32_upper,
                   c.a32_lower < k && k < c.a32_upper});
    return out;
}

TwoSided mb41_check(double x) {
    if (!(x > 0.0) || !(x < pi_of<double>() / 2))
        throw DomainError("mb41_check requires x in (0, pi/2)");
    const double c = std::cos(x);
    return {(std::sin(2.0 * x) + std::sin(x)) / (3.0 * x),
            0.25 * (c + 1.0) * (c + 1.0)};
}

} // namespace sincbounds
