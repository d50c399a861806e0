#pragma once

// The inequality verification engine: pointwise margin scanning with
// adaptive refinement, endpoint-asymptotic checks for removable
// tangencies, monotonicity checking, perturbation-based sharpness search,
// and the built-in catalogue of inequality claims.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sincbounds/core.hpp"

namespace sincbounds {

using RealFn = std::function<double(double)>;

struct IntervalSpec {
    double lo = 0;
    double hi = 0;
    bool lo_open = true;
    bool hi_open = true;
    double endpoint_epsilon = 1e-6;
};

enum class Relation { StrictLess, LessOrEqual, EqualUlps };

struct InequalityCase {
    std::string id;
    std::string claim; // human-readable statement of the inequality
    RealFn lhs;
    RealFn rhs;
    Relation relation = Relation::StrictLess;
    IntervalSpec domain;
    bool expect_holds = true;
    // Leading power of the margin at the lower endpoint (0 = margin stays
    // bounded away from zero there). Margins inside the tangency zone are
    // assessed relative to (x - lo)^zero_order, since the raw margin
    // vanishes faster than rounding noise.
    int zero_order = 0;
    double max_ulps = 8; // EqualUlps only
};

enum class Status { verified, violated, inconclusive };

std::string to_string(Status s);

struct Verdict {
    Status status = Status::inconclusive;
    double min_margin = 0; // scale-adjusted minimum margin over the scan
    double argmin = 0;
    double witness = std::numeric_limits<double>::quiet_NaN();
    double gap = 0; // depth of the worst violation, when violated
    long evaluations = 0;
};

/// Scans rhs - lhs over the case domain on a uniform grid (>= 64 cells),
/// adaptively refines the smallest-margin cells, and applies the
/// endpoint-asymptotic checks. Deterministic for fixed inputs.
Verdict verify_case(const InequalityCase& c, int grid,
                    const PrecisionConfig& cfg = {});

enum class Direction { increasing, decreasing };

/// Checks the sign of consecutive differences of fn over the domain, with
/// bisection refinement of near-ties. grid >= 128.
Verdict verify_monotone(const RealFn& fn, const IntervalSpec& domain,
                        Direction direction, int grid);

struct Violation {
    double witness = 0;
    double gap = 0;
};

/// Dense scan (uniform plus geometric clustering at both endpoints) of the
/// margin rhs - lhs, followed by local descent; returns the point of
/// deepest definite violation, if any.
std::optional<Violation> find_violation(const RealFn& lhs, const RealFn& rhs,
                                        const IntervalSpec& region);

/// The full inequality catalogue (every pointwise claim plus the designed
/// failure exemplars and the two algebraic identity checks).
std::vector<InequalityCase> builtin_suite();

struct MonotoneCase {
    std::string id;
    std::string claim;
    RealFn fn;
    IntervalSpec domain;
    Direction direction = Direction::increasing;
};

/// Monotonicity claims: f_p in x for the two exponent regimes, F_p in x,
/// p -> f_p(pi/2) in p, and p -> (cos px)^{1/p} in p.
std::vector<MonotoneCase> builtin_monotone_suite();

struct SharpnessCase {
    std::string id;
    std::string claim;
    RealFn lhs;
    RealFn rhs;
    IntervalSpec region;
};

/// Perturbed best-constant claims; each must produce a concrete violation.
std::vector<SharpnessCase> builtin_sharpness_suite();

} // namespace sincbounds
