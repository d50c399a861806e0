#include "sincbounds/core.hpp"

#include <cmath>

namespace sincbounds {

double eval_bound(const BoundExpr& expr, double x) {
    const double pi = pi_of<double>();
    switch (expr.kind) {
    case BoundKind::Sinc:
        return sinc(x);
    case BoundKind::CosPower:
        return cos_power(expr.p, x);
    case BoundKind::ScaledCosPower:
        return beta(expr.p, expr.c) * cos_power(expr.p, x);
    case BoundKind::QiLower: {
        const double c = std::cos(x / 2);
        return c * c;
    }
    case BoundKind::KlenUpper3: {
        if (!(std::fabs(x) < 1.5 * pi))
            throw DomainError("cos^3(x/3) bound requires |x| < 3pi/2");
        const double c = std::cos(x / 3);
        return c * c * c;
    }
    case BoundKind::TwoPlusCosOver3:
        return (2.0 + std::cos(x)) / 3.0;
    case BoundKind::Mb4Rational: {
        const double c = std::cos(x);
        if (!(2.0 * c + 1.0 > 0.0))
            throw DomainError("rational bound requires 2cos(x)+1 > 0");
        return 0.75 * (c + 1.0) * (c + 1.0) / (2.0 * c + 1.0);
    }
    case BoundKind::ThreeCosCubed: {
        const double c = std::cos(x);
        return 3.0 * c * c * c;
    }
    case BoundKind::ConstantTwoOverPi:
        return 2.0 / pi;
    case BoundKind::CosPowerAlpha: {
        if (!(std::fabs(x) < 1.5 * pi))
            throw DomainError("(cos(x/3))^alpha requires |x| < 3pi/2");
        return std::pow(std::cos(x / 3), expr.alpha);
    }
    }
    throw DomainError("unknown bound expression");
}

BoundExpr parse_bound_selector(const std::string& name, double p, double c,
                               double alpha) {
    if (name == "sinc") return BoundExpr::sinc_expr();
    if (name == "cos-power") return BoundExpr::cos_pow(p);
    if (name == "scaled-cos-power") return BoundExpr::scaled_cos_pow(p, c);
    if (name == "qi") return BoundExpr::qi_lower();
    if (name == "klen3") return BoundExpr::klen_upper3();
    if (name == "two-plus-cos") return BoundExpr::two_plus_cos_over3();
    if (name == "mb4") return BoundExpr::mb4_rational();
    if (name == "three-cos-cubed") return BoundExpr::three_cos_cubed();
    if (name == "two-over-pi") return BoundExpr::constant_two_over_pi();
    if (name == "cos-power-alpha") return BoundExpr::cos_pow_alpha(alpha);
    throw DomainError("unknown bound selector: " + name);
}

} // namespace sincbounds
