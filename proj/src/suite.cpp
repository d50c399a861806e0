#include <cmath>
#include <cstdio>
#include <string>

#include "sincbounds/constants.hpp"
#include "sincbounds/verifier.hpp"

// The built-in claim catalogue. Each entry records one pointwise
// inequality (or identity) with its domain, expected verdict, and the
// leading margin power at the removable endpoint.

namespace sincbounds {

namespace {

RealFn sinc_fn() {
    return [](double x) { return sinc(x); };
}

RealFn cos_pow_fn(double p) {
    return [p](double x) { return cos_power(p, x); };
}

RealFn scaled_cos_pow_fn(double p, double c) {
    const double b = beta(p, c);
    return [p, b](double x) { return b * cos_power(p, x); };
}

RealFn cos_cubed_third_fn() {
    return [](double x) {
        const double c = std::cos(x / 3);
        return c * c * c;
    };
}

RealFn const_fn(double v) {
    return [v](double) { return v; };
}


std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}
IntervalSpec open_interval(double lo, double hi) {
    return {lo, hi, true, true};
}

} // namespace

std::vector<InequalityCase> builtin_suite() {
    const double pi = pi_of<double>();
    const ConstantCatalogue cat = catalogue();
    const auto sinc_ = sinc_fn();

    std::vector<InequalityCase> cases;
    auto add = [&cases](InequalityCase c) { cases.push_back(std::move(c)); };

    const IntervalSpec half_pi = open_interval(0, pi / 2);
    const IntervalSpec to_pi = open_interval(0, pi);
    const IntervalSpec three_half_pi = open_interval(0, 1.5 * pi);

    // Classical two-sided bound, closed at pi/2 where equality holds.
    add({"jordan-lower", "2/pi <= sin(x)/x on (0, pi/2]",
         const_fn(2.0 / pi), sinc_, Relation::LessOrEqual,
         {0, pi / 2, true, false}});
    add({"jordan-upper", "sin(x)/x <= 1 on (0, pi/2]",
         sinc_, const_fn(1.0), Relation::LessOrEqual,
         {0, pi / 2, true, false}, true, 2});

    add({"qi-lower", "cos^2(x/2) < sin(x)/x on (0, pi)",
         [](double x) { const double c = std::cos(x / 2); return c * c; },
         sinc_, Relation::StrictLess, to_pi, true, 2});

    add({"klen-upper", "sin(x)/x < cos^3(x/3) on (0, pi)",
         sinc_, cos_cubed_third_fn(), Relation::StrictLess, to_pi, true, 4});
    add({"klen-chain3", "cos^3(x/3) < (2 + cos x)/3 on (0, pi)",
         cos_cubed_third_fn(),
         [](double x) { return (2.0 + std::cos(x)) / 3.0; },
         Relation::StrictLess, to_pi, true, 4});
    add({"klen-upper-extended", "sin(x)/x < cos^3(x/3) on (0, 3pi/2)",
         sinc_, cos_cubed_third_fn(), Relation::StrictLess, three_half_pi,
         true, 4});

    // Lower cos-power bound: holds exactly for p in [p0, 1].
    for (double p : {cat.p0, 0.4, 0.7, 1.0}) {
        add({"cos-power-lower-p=" + num(p),
             "(cos px)^{1/p} < sin(x)/x on (0, pi/2), p=" + num(p),
             cos_pow_fn(p), sinc_, Relation::StrictLess, half_pi, true, 2});
    }
    // Upper cos-power bound: holds exactly for q in (0, 1/3].
    for (double q : {0.1, 0.2, 1.0 / 3.0}) {
        add({"cos-power-upper-q=" + num(q),
             "sin(x)/x < (cos qx)^{1/q} on (0, pi/2), q=" + num(q),
             sinc_, cos_pow_fn(q), Relation::StrictLess, half_pi, true,
             q == 1.0 / 3.0 ? 4 : 2});
    }

    // Sharp-exponent refinements around the 1/3 family.
    add({"alpha-exponent-lower",
         "(cos(x/3))^alpha < sin(x)/x on (0, pi/2), alpha = 2(ln pi - ln 2)/(ln 4 - ln 3)",
         [a = cat.alpha](double x) { return std::pow(std::cos(x / 3), a); },
         sinc_, Relation::StrictLess, half_pi, true, 2});
    add({"alpha-exponent-upper", "sin(x)/x < cos^3(x/3) on (0, pi/2)",
         sinc_, cos_cubed_third_fn(), Relation::StrictLess, half_pi, true, 4});
    add({"p0-exponent-upper",
         "sin(x)/x < (cos p0 x)^{1/(3 p0^2)} on (0, pi/2)",
         sinc_,
         [p0 = cat.p0](double x) {
             return std::exp(std::log(std::cos(p0 * x)) / (3 * p0 * p0));
         },
         Relation::StrictLess, half_pi, true, 4});

    // Scaled two-sided bounds with the sharp endpoint ratio beta_p(pi/2).
    for (double p : {0.1, 0.25, 1.0 / 3.0}) {
        add({"scaled-lower-p=" + num(p),
             "beta_p(pi/2) (cos px)^{1/p} < sin(x)/x on (0, pi/2), p=" +
                 num(p),
             scaled_cos_pow_fn(p, pi / 2), sinc_, Relation::StrictLess,
             half_pi, true, 0});
        add({"scaled-upper-p=" + num(p),
             "sin(x)/x < (cos px)^{1/p} on (0, pi/2), p=" + num(p),
             sinc_, cos_pow_fn(p), Relation::StrictLess, half_pi, true,
             p == 1.0 / 3.0 ? 4 : 2});
    }
    // Reversed regime p in [1/2, 1]. The scaled upper constant
    // beta_1(pi/2) diverges, so p=1 contributes only the plain lower side.
    for (double p : {0.5, 0.75, 1.0}) {
        add({"reversed-lower-p=" + num(p),
             "(cos px)^{1/p} < sin(x)/x on (0, pi/2), p=" + num(p),
             cos_pow_fn(p), sinc_, Relation::StrictLess, half_pi, true, 2});
        if (p < 1.0) {
            add({"reversed-scaled-upper-p=" + num(p),
                 "sin(x)/x < beta_p(pi/2) (cos px)^{1/p} on (0, pi/2), p=" +
                     num(p),
                 sinc_, scaled_cos_pow_fn(p, pi / 2), Relation::StrictLess,
                 half_pi, true, 0});
        }
    }

    // The 1/3 family with explicit closed-form constants.
    add({"cube-scaled-lower",
         "16 sqrt(3)/(9 pi) cos^3(x/3) < sin(x)/x on (0, pi/2)",
         [b = cat.beta_13_half, f = cos_cubed_third_fn()](double x) {
             return b * f(x);
         },
         sinc_, Relation::StrictLess, half_pi, true, 0});
    add({"cube-upper", "sin(x)/x < cos^3(x/3) on (0, pi/2)",
         sinc_, cos_cubed_third_fn(), Relation::StrictLess, half_pi, true, 4});
    add({"cube-scaled-lower-quarter",
         "16(3 sqrt(3) - 5)/pi cos^3(x/3) < sin(x)/x on (0, pi/4)",
         [b = cat.beta_13_quarter, f = cos_cubed_third_fn()](double x) {
             return b * f(x);
         },
         sinc_, Relation::StrictLess, open_interval(0, pi / 4), true, 0});

    add({"triple-angle", "sin(3x)/x < 3 cos^3 x on (0, pi/2)",
         [](double x) { return std::sin(3.0 * x) / x; },
         [](double x) { const double c = std::cos(x); return 3.0 * c * c * c; },
         Relation::StrictLess, half_pi, true, 4});
    add({"rational-upper",
         "sin(x)/x < (3/4)(cos x + 1)^2/(2 cos x + 1) on (0, pi/2)",
         sinc_,
         [](double x) {
             const double c = std::cos(x);
             return 0.75 * (c + 1) * (c + 1) / (2 * c + 1);
         },
         Relation::StrictLess, half_pi, true, 4});
    add({"sum-form-upper",
         "(sin 2x + sin x)/(3x) < ((cos x + 1)/2)^2 on (0, pi/2)",
         [](double x) { return (std::sin(2 * x) + std::sin(x)) / (3 * x); },
         [](double x) {
             const double c = std::cos(x);
             return 0.25 * (c + 1) * (c + 1);
         },
         Relation::StrictLess, half_pi, true, 4});

    add({"half-square-lower", "cos^2(x/2) < sin(x)/x on (0, pi/2)",
         [](double x) { const double c = std::cos(x / 2); return c * c; },
         sinc_, Relation::StrictLess, half_pi, true, 2});
    add({"half-square-scaled-upper",
         "sin(x)/x < (4/pi) cos^2(x/2) on (0, pi/2)",
         sinc_,
         [](double x) {
             const double c = std::cos(x / 2);
             return 4.0 / pi_of<double>() * c * c;
         },
         Relation::StrictLess, half_pi, true, 0});

    // Product chain used by the sine-integral enclosure.
    const auto product_bound = [](double x) {
        const double c = std::cos(x / 6);
        return c * c * c * std::cos(x / 2);
    };
    add({"product-chain-lower",
         "16(3 sqrt(3) - 5)/pi cos^3(x/6) cos(x/2) < sin(x)/x on (0, pi/2)",
         [b = cat.beta_13_quarter, product_bound](double x) {
             return b * product_bound(x);
         },
         sinc_, Relation::StrictLess, half_pi, true, 0});
    add({"product-chain-upper",
         "sin(x)/x < cos^3(x/6) cos(x/2) on (0, pi/2)",
         sinc_, product_bound, Relation::StrictLess, half_pi, true, 4});

    // Designed failure exemplars: the thresholds are sharp.
    add({"fail-lower-p=0.346",
         "(cos px)^{1/p} < sin(x)/x fails on (0, pi/2) for p = 0.346 < p0",
         cos_pow_fn(0.346), sinc_, Relation::StrictLess, half_pi, false, 2});
    add({"fail-upper-q=0.34",
         "sin(x)/x < (cos qx)^{1/q} fails on (0, pi/2) for q = 0.34 > 1/3",
         sinc_, cos_pow_fn(0.34), Relation::StrictLess, half_pi, false, 2});

    // Algebraic identity checks behind the extended-domain argument.
    add({"identity-extension-derivative",
         "1 - sin x sin(x/3)/cos^4(x/3) - cos x/cos^3(x/3) = tan^4(x/3) on (0, 3pi/2)",
         [](double x) {
             const double c = std::cos(x / 3);
             const double c3 = c * c * c;
             return 1.0 - std::sin(x) * std::sin(x / 3) / (c3 * c) -
                    std::cos(x) / c3;
         },
         [](double x) {
             const double t = std::tan(x / 3);
             return t * t * t * t;
         },
         Relation::EqualUlps, three_half_pi, true, 0, 8});
    add({"identity-cube-difference",
         "cos^3(x/3) - (2 + cos x)/3 = -(1/3)(cos(x/3) + 2)(cos(x/3) - 1)^2 on (0, 3pi/2)",
         [f = cos_cubed_third_fn()](double x) {
             return f(x) - (2.0 + std::cos(x)) / 3.0;
         },
         [](double x) {
             const double c = std::cos(x / 3);
             return -(c + 2) * (c - 1) * (c - 1) / 3.0;
         },
         Relation::EqualUlps, three_half_pi, true, 0, 8});

    return cases;
}

std::vector<MonotoneCase> builtin_monotone_suite() {
    const double pi = pi_of<double>();
    std::vector<MonotoneCase> cases;
    const IntervalSpec half_pi = {0, pi / 2, true, true};

    for (double p : {0.1, 0.25, 1.0 / 3.0}) {
        cases.push_back({"fp-decreasing-p=" + num(p),
                         "x -> f_p(x) decreasing on (0, pi/2), p=" +
                             num(p),
                         [p](double x) { return f_p(p, x); }, half_pi,
                         Direction::decreasing});
    }
    for (double p : {0.5, 0.75, 1.0}) {
        cases.push_back({"fp-increasing-p=" + num(p),
                         "x -> f_p(x) increasing on (0, pi/2), p=" +
                             num(p),
                         [p](double x) { return f_p(p, x); }, half_pi,
                         Direction::increasing});
    }
    const double sqrt5_inv = std::sqrt(5.0) / 5.0;
    for (double p : {0.1, 0.3, sqrt5_inv}) {
        cases.push_back({"Fp-increasing-p=" + num(p),
                         "x -> ln(sin x/x)/ln cos px increasing on (0, pi/2), p=" +
                             num(p),
                         [p](double x) { return big_f(p, x); }, half_pi,
                         Direction::increasing});
    }
    for (double p : {0.5, 0.75, 1.0}) {
        cases.push_back({"Fp-decreasing-p=" + num(p),
                         "x -> ln(sin x/x)/ln cos px decreasing on (0, pi/2), p=" +
                             num(p),
                         [p](double x) { return big_f(p, x); }, half_pi,
                         Direction::decreasing});
    }
    cases.push_back({"fp-at-half-pi-increasing-in-p",
                     "p -> f_p(pi/2) increasing on (0.05, 0.95)",
                     [pi](double p) { return f_p(p, pi / 2); },
                     {0.05, 0.95, true, true}, Direction::increasing});
    for (double x : {0.3, 0.8, 1.3}) {
        cases.push_back({"cos-power-decreasing-in-p-x=" + num(x),
                         "p -> (cos px)^{1/p} decreasing on (0, 1], x=" +
                             num(x),
                         [x](double p) { return cos_power(p, x); },
                         {0, 1, true, false, 1e-3}, Direction::decreasing});
    }
    return cases;
}

std::vector<SharpnessCase> builtin_sharpness_suite() {
    const double pi = pi_of<double>();
    const ConstantCatalogue cat = catalogue();
    const auto sinc_ = sinc_fn();
    constexpr double bump = 1e-6;

    std::vector<SharpnessCase> cases;
    const IntervalSpec half_pi = {0, pi / 2, true, true};

    cases.push_back(
        {"sharp-beta-13-half",
         "raising beta_{1/3}(pi/2) by 1e-6 breaks the scaled lower bound near pi/2",
         [b = cat.beta_13_half * (1 + bump), f = cos_cubed_third_fn()](double x) {
             return b * f(x);
         },
         sinc_, half_pi});
    cases.push_back(
        {"sharp-upper-multiplier",
         "scaling the upper bound cos^3(x/3) by 1 - 1e-6 breaks it near 0",
         sinc_,
         [f = cos_cubed_third_fn()](double x) { return (1 - bump) * f(x); },
         half_pi});
    cases.push_back(
        {"sharp-alpha-exponent",
         "lowering the exponent alpha by a factor 1 - 1e-6 breaks the lower bound near pi/2",
         [a = cat.alpha * (1 - bump)](double x) {
             return std::pow(std::cos(x / 3), a);
         },
         sinc_, half_pi});
    cases.push_back(
        {"sharp-beta-13-quarter",
         "raising beta_{1/3}(pi/4) by 1e-6 breaks the scaled lower bound near pi/4",
         [b = cat.beta_13_quarter * (1 + bump), f = cos_cubed_third_fn()](double x) {
             return b * f(x);
         },
         sinc_, {0, pi / 4, true, true}});
    cases.push_back(
        {"sharp-beta-12-half",
         "shrinking beta_{1/2}(pi/2) by 1e-6 breaks the reversed upper bound near pi/2",
         sinc_,
         [b = cat.beta_12_half * (1 - bump)](double x) {
             const double c = std::cos(x / 2);
             return b * c * c;
         },
         half_pi});
    return cases;
}

} // namespace sincbounds
