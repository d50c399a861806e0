// Command-line front end: constants, verification reports, single-bound
// evaluation, and the application integrals.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sincbounds/constants.hpp"
#include "sincbounds/means.hpp"
#include "sincbounds/quadrature.hpp"
#include "sincbounds/report.hpp"
#include "sincbounds/version.hpp"

namespace {

using mp50 = boost::multiprecision::cpp_bin_float_50;
using namespace sincbounds;

std::string d17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int cmd_constants(const std::string& format, const std::string& precision,
                  double tol) {
    if (precision == "oracle") {
        // Everything recomputed in 50-digit arithmetic, 36 digits shown.
        const mp50 pi = pi_of<mp50>();
        const mp50 p0 = solve_p0_real<mp50>(mp50(1e-28));
        const mp50 alpha = 2 * (log(pi) - log(mp50(2))) / (log(mp50(4)) - log(mp50(3)));
        const mp50 s3 = sqrt(mp50(3));
        const mp50 b13h = 16 * s3 / (9 * pi);
        const mp50 b13q = 16 * (3 * s3 - 5) / pi;
        const mp50 b12h = 4 / pi;
        std::cout << std::setprecision(36);
        const char* sep = format == "machine" ? "=" : " = ";
        std::cout << "p0" << sep << p0 << "\n"
                  << "alpha" << sep << alpha << "\n"
                  << "beta_13_half" << sep << b13h << "\n"
                  << "beta_13_quarter" << sep << b13q << "\n"
                  << "beta_12_half" << sep << b12h << "\n";
        return 0;
    }
    const RootResult root = solve_p0(tol > 0 ? tol : 1e-13);
    const ConstantCatalogue c = catalogue();
    if (format == "machine") {
        std::cout << "p0=" << d17(c.p0) << "\n"
                  << "p0_residual=" << d17(root.residual) << "\n"
                  << "alpha=" << d17(c.alpha) << "\n"
                  << "beta_13_half=" << d17(c.beta_13_half) << "\n"
                  << "beta_13_quarter=" << d17(c.beta_13_quarter) << "\n"
                  << "beta_12_half=" << d17(c.beta_12_half) << "\n"
                  << "a2_lower=" << d17(c.a2_lower) << "\n"
                  << "a2_upper=" << d17(c.a2_upper) << "\n"
                  << "a31_lower=" << d17(c.a31_lower) << "\n"
                  << "a31_upper=" << d17(c.a31_upper) << "\n"
                  << "a32_lower=" << d17(c.a32_lower) << "\n"
                  << "a32_upper=" << d17(c.a32_upper) << "\n";
        return 0;
    }
    std::cout << "p0              = " << d17(c.p0) << "  (residual "
              << d17(root.residual) << ", " << root.iterations << " iterations)\n";
    std::cout << "alpha           = " << d17(c.alpha) << "\n";
    std::cout << "beta_13_half    = " << d17(c.beta_13_half) << "  (= 16*sqrt(3)/(9*pi))\n";
    std::cout << "beta_13_quarter = " << d17(c.beta_13_quarter) << "  (= 16*(3*sqrt(3)-5)/pi)\n";
    std::cout << "beta_12_half    = " << d17(c.beta_12_half) << "  (= 4/pi)\n";
    std::cout << "a2  = (" << d17(c.a2_lower) << ", " << d17(c.a2_upper) << ")\n";
    std::cout << "a31 = (" << d17(c.a31_lower) << ", " << d17(c.a31_upper) << ")\n";
    std::cout << "a32 = (" << d17(c.a32_lower) << ", " << d17(c.a32_upper) << ")\n";
    return 0;
}

int cmd_verify(const std::string& suite_name, int grid,
               const std::string& format, const std::string& precision) {
    PrecisionConfig cfg;
    cfg.mode = precision == "oracle" ? PrecisionMode::oracle : PrecisionMode::working;
    const ReportDocument doc = run_report(parse_suite(suite_name), grid, cfg);
    std::cout << (format == "machine" ? emit_machine(doc) : emit_text(doc));
    return doc.all_expectations_met() ? 0 : 1;
}

// Whether the selected family sits below sinc (margin = sinc - bound) or
// above it (margin = bound - sinc); positive margin means the claimed
// ordering holds at x.
bool bound_is_lower(const BoundExpr& e) {
    switch (e.kind) {
    case BoundKind::QiLower:
    case BoundKind::ConstantTwoOverPi:
    case BoundKind::CosPowerAlpha:
        return true;
    case BoundKind::CosPower:
        return e.p > 1.0 / 3.0; // upper family for p <= 1/3
    case BoundKind::ScaledCosPower:
        return e.p <= 1.0 / 3.0; // the scale flips the side
    default:
        return false;
    }
}

int cmd_eval(const std::string& bound, double p, double c, double alpha,
             double x) {
    const BoundExpr expr = parse_bound_selector(bound, p, c, alpha);
    const double b = eval_bound(expr, x);
    const double s = sinc(x);
    const bool lower = bound_is_lower(expr);
    std::cout << "bound  = " << d17(b) << "\n";
    std::cout << "sinc   = " << d17(s) << "\n";
    std::cout << "margin = " << d17(lower ? s - b : b - s) << "  ("
              << (lower ? "sinc - bound" : "bound - sinc") << ")\n";
    return 0;
}

int cmd_integrals(const std::string& format, double tol) {
    const double pi = pi_of<double>();
    struct Row {
        std::string name;
        double value;
        double reference;
    };
    std::vector<Row> rows;

    const QuadratureResult qsi =
        integrate([](double x) { return sinc(x); }, 0.0, pi / 2, tol);
    rows.push_back({"si_half_pi", si(pi / 2), qsi.value});

    const QuadratureResult qk =
        integrate([](double x) { return 0.5 * inv_sinc(x); }, 0.0, pi / 2, tol);
    rows.push_back({"catalan", catalan_reference(), qk.value});

    const QuadratureResult q1 = integrate(
        [](double x) {
            const double cc = std::cos(x / 3);
            return 1.0 / (cc * cc * cc);
        },
        0.0, pi / 2, tol);
    rows.push_back({"inverse_cos_cubed", q1.value, 1.0 + 0.75 * std::log(3.0)});

    const double s3 = std::sqrt(3.0);
    const QuadratureResult q2 = integrate(
        [](double x) {
            const double cc = std::cos(x / 6);
            return 1.0 / (std::cos(x / 2) * cc * cc * cc);
        },
        0.0, pi / 2, tol);
    rows.push_back({"inverse_product", q2.value,
                    8.0 * s3 / 9.0 * (2.0 * std::log(s3 + 1.0) - 10.0 * s3 + 16.5)});

    bool ok = true;
    for (const Row& r : rows) {
        const double resid = std::fabs(r.value - r.reference) /
                             std::max(1.0, std::fabs(r.reference));
        if (resid > 1e-10) ok = false;
        if (format == "machine") {
            std::cout << r.name << "=" << d17(r.value) << "\n"
                      << r.name << "_reference=" << d17(r.reference) << "\n"
                      << r.name << "_residual=" << d17(resid) << "\n";
        } else {
            std::cout << r.name << " = " << d17(r.value) << "  (reference "
                      << d17(r.reference) << ", residual " << d17(resid) << ")\n";
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp sinc bounds: constants, verification, evaluation"};
    app.set_version_flag("--version", std::string(version_string));
    app.require_subcommand(1);

    std::string format = "text";
    std::string precision = "working";
    std::string suite = "all";
    std::string bound = "sinc";
    int grid = 256;
    double tol = 0;
    double p = 1.0 / 3.0, c = 0, alpha = 0, x = 1.0;

    auto* sc_const = app.add_subcommand("constants", "print the sharp constants");
    sc_const->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));
    sc_const->add_option("--precision", precision)->check(CLI::IsMember({"working", "oracle"}));
    sc_const->add_option("--tol", tol);

    auto* sc_verify = app.add_subcommand("verify", "run the verification suite");
    sc_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "core", "applications", "sharpness"}));
    sc_verify->add_option("--grid", grid)->check(CLI::Range(64, 1 << 20));
    sc_verify->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));
    sc_verify->add_option("--precision", precision)->check(CLI::IsMember({"working", "oracle"}));

    auto* sc_eval = app.add_subcommand("eval", "evaluate one bound against sinc");
    sc_eval->add_option("bound", bound, "bound family selector");
    sc_eval->add_option("--p", p);
    sc_eval->add_option("--c", c);
    sc_eval->add_option("--alpha", alpha);
    sc_eval->add_option("--x", x);

    auto* sc_int = app.add_subcommand("integrals", "application integrals and residuals");
    sc_int->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));
    sc_int->add_option("--tol", tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*sc_const) return cmd_constants(format, precision, tol);
        if (*sc_verify) return cmd_verify(suite, grid, format, precision);
        if (*sc_eval) return cmd_eval(bound, p, c, alpha, x);
        if (*sc_int) return cmd_integrals(format, tol > 0 ? tol : 1e-12);
    } catch (const sincbounds::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
