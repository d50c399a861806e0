#include "sincbounds/verifier.hpp"

#include <algorithm>
#include <cmath>

namespace sincbounds {

std::string to_string(Status s) {
    switch (s) {
    case Status::verified: return "verified";
    case Status::violated: return "violated";
    case Status::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

double local_scale(double lhs, double rhs) {
    return std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

// Margin rounding noise is ~eps * scale; anything below this cannot be
// called a violation.
double violation_threshold(double lhs, double rhs) {
    return 4.0 * eps * local_scale(lhs, rhs);
}

struct MarginEval {
    double raw;
    double scaled;
    double threshold;
};

class CaseScanner {
public:
    CaseScanner(const InequalityCase& c, const PrecisionConfig& cfg)
        : c_(c), cfg_(cfg) {}

    MarginEval margin(double x) {
        const double l = c_.lhs(x);
        const double r = c_.rhs(x);
        ++evals_;
        const double raw = r - l;
        double scaled = raw;
        if (c_.zero_order > 0) {
            const double d = x - c_.domain.lo;
            if (d > 0 && d < 1.0)
                scaled = raw / std::pow(d, c_.zero_order);
        }
        return {raw, scaled, violation_threshold(l, r)};
    }

    long evaluations() const { return evals_; }

    // Raw margins below the leading-power noise floor are meaningless; the
    // scan starts past the cutoff and the series-sign check covers the rest.
    double scan_lo() const {
        double lo = c_.domain.lo + (c_.domain.lo_open ? c_.domain.endpoint_epsilon : 0.0);
        if (c_.zero_order >= 4) lo = std::max(lo, c_.domain.lo + 1e-2);
        else if (c_.zero_order > 0) lo = std::max(lo, c_.domain.lo + 1e-3);
        return lo;
    }

    double scan_hi() const {
        return c_.domain.hi - (c_.domain.hi_open ? c_.domain.endpoint_epsilon : 0.0);
    }

private:
    const InequalityCase& c_;
    const PrecisionConfig& cfg_;
    long evals_ = 0;
};

Verdict verify_equal_ulps(const InequalityCase& c, int grid) {
    Verdict v;
    const double lo = c.domain.lo + (c.domain.lo_open ? c.domain.endpoint_epsilon : 0.0);
    const double hi = c.domain.hi - (c.domain.hi_open ? c.domain.endpoint_epsilon : 0.0);
    double worst = 0; // ulps
    double worst_x = lo;
    for (int i = 0; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double l = c.lhs(x);
        const double r = c.rhs(x);
        v.evaluations += 1;
        const double ulps = std::fabs(l - r) / (eps * local_scale(l, r));
        if (ulps > worst) {
            worst = ulps;
            worst_x = x;
        }
    }
    v.min_margin = -worst;
    v.argmin = worst_x;
    if (worst <= c.max_ulps) {
        v.status = Status::verified;
    } else {
        v.status = Status::violated;
        v.witness = worst_x;
        v.gap = worst;
    }
    return v;
}

} // namespace

Verdict verify_case(const InequalityCase& c, int grid,
                    const PrecisionConfig& cfg) {
    if (grid < 64) throw DomainError("verify_case requires grid >= 64");
    if (c.relation == Relation::EqualUlps) return verify_equal_ulps(c, grid);

    CaseScanner scan(c, cfg);
    Verdict v;
    const double lo = scan.scan_lo();
    const double hi = scan.scan_hi();

    double min_scaled = std::numeric_limits<double>::infinity();
    double argmin = lo;
    double worst_raw = std::numeric_limits<double>::infinity();
    double worst_raw_x = lo;
    bool have_witness = false;
    double first_witness = 0;

    auto consider = [&](double x, const MarginEval& m) {
        if (m.scaled < min_scaled) {
            min_scaled = m.scaled;
            argmin = x;
        }
        if (m.raw < worst_raw) {
            worst_raw = m.raw;
            worst_raw_x = x;
        }
        if (!have_witness && m.raw < -m.threshold) {
            have_witness = true;
            first_witness = x;
        }
    };

    // Uniform scan.
    for (int i = 0; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        consider(x, scan.margin(x));
    }

    // Adaptive bisection of the smallest-margin cell (and its neighbors)
    // down to depth 20.
    {
        const double h = (hi - lo) / grid;
        double a = std::max(lo, argmin - h);
        double b = std::min(hi, argmin + h);
        for (int depth = 0; depth < 20; ++depth) {
            const double m1 = a + (b - a) / 3;
            const double m2 = b - (b - a) / 3;
            const MarginEval e1 = scan.margin(m1);
            const MarginEval e2 = scan.margin(m2);
            consider(m1, e1);
            consider(m2, e2);
            if (e1.scaled < e2.scaled) b = m2; else a = m1;
        }
    }

    // Endpoint-asymptotic check: the sign of the leading series
    // coefficient, read off from the scale-adjusted margin at small
    // distances from the removable endpoint.
    bool endpoint_ok = true;
    if (c.zero_order > 0 && c.domain.lo_open) {
        for (double d : {4e-2, 2e-2, 1e-2}) {
            const double x = c.domain.lo + d;
            if (x >= hi) continue;
            const MarginEval m = scan.margin(x);
            consider(x, m);
            if (m.scaled <= cfg.margin_floor) endpoint_ok = false;
        }
    }

    v.evaluations = scan.evaluations();
    v.min_margin = min_scaled;
    v.argmin = argmin;

    if (have_witness) {
        v.status = Status::violated;
        v.witness = first_witness;
        v.gap = -worst_raw;
        v.argmin = worst_raw_x;
        return v;
    }
    const bool floor_ok = c.relation == Relation::LessOrEqual
                              ? true // equality endpoints are admissible
                              : min_scaled > cfg.margin_floor;
    v.status = (floor_ok && endpoint_ok) ? Status::verified : Status::inconclusive;
    return v;
}

Verdict verify_monotone(const RealFn& fn, const IntervalSpec& domain,
                        Direction direction, int grid) {
    if (grid < 128) throw DomainError("verify_monotone requires grid >= 128");
    Verdict v;
    const double lo = domain.lo + (domain.lo_open ? domain.endpoint_epsilon : 0.0);
    const double hi = domain.hi - (domain.hi_open ? domain.endpoint_epsilon : 0.0);
    const double sign = direction == Direction::increasing ? 1.0 : -1.0;

    double prev_x = lo;
    double prev_f = fn(lo);
    v.evaluations = 1;
    double min_step = std::numeric_limits<double>::infinity();
    double argmin = lo;
    for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double f = fn(x);
        ++v.evaluations;
        const double step = sign * (f - prev_f);
        const double tie = 8.0 * eps * std::max({1.0, std::fabs(f), std::fabs(prev_f)});
        if (step < min_step) {
            min_step = step;
            argmin = 0.5 * (prev_x + x);
        }
        if (step < -tie) {
            // Reversal candidate: refine the cell before giving a verdict.
            double a = prev_x, b = x, fa = prev_f, fb = f;
            bool confirmed = true;
            for (int depth = 0; depth < 20 && confirmed; ++depth) {
                const double m = 0.5 * (a + b);
                const double fm = fn(m);
                ++v.evaluations;
                if (sign * (fm - fa) < -tie) {
                    b = m; fb = fm;
                } else if (sign * (fb - fm) < -tie) {
                    a = m; fa = fm;
                } else {
                    confirmed = false;
                }
            }
            if (confirmed) {
                v.status = Status::violated;
                v.witness = 0.5 * (a + b);
                v.gap = -step;
                v.min_margin = min_step;
                v.argmin = argmin;
                return v;
            }
        }
        prev_x = x;
        prev_f = f;
    }
    v.min_margin = min_step;
    v.argmin = argmin;
    v.status = Status::verified;
    return v;
}

std::optional<Violation> find_violation(const RealFn& lhs, const RealFn& rhs,
                                        const IntervalSpec& region) {
    const double lo = region.lo + (region.lo_open ? region.endpoint_epsilon : 0.0);
    const double hi = region.hi - (region.hi_open ? region.endpoint_epsilon : 0.0);
    const double len = hi - lo;

    double best = std::numeric_limits<double>::infinity();
    double best_x = lo;
    double best_thresh = 0;
    auto probe = [&](double x) {
        const double l = lhs(x);
        const double r = rhs(x);
        const double m = r - l;
        if (m < best) {
            best = m;
            best_x = x;
            best_thresh = violation_threshold(l, r);
        }
    };

    constexpr int n = 512;
    for (int i = 0; i <= n; ++i) probe(lo + len * i / n);
    // Sharpness failures concentrate at the endpoints; sample both ends
    // geometrically down to 1e-12 of the interval length.
    for (int k = 2; k <= 12; ++k) {
        const double d = len * std::pow(10.0, -k);
        probe(lo + d);
        probe(hi - d);
    }

    // Local golden-section descent around the best sample.
    {
        const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = std::max(lo, best_x - len / n);
        double b = std::min(hi, best_x + len / n);
        double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
        auto margin_at = [&](double x) {
            probe(x);
            return rhs(x) - lhs(x);
        };
        double f1 = margin_at(x1), f2 = margin_at(x2);
        for (int it = 0; it < 60; ++it) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - phi * (b - a);
                f1 = margin_at(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + phi * (b - a);
                f2 = margin_at(x2);
            }
        }
    }

    if (best < -best_thresh) return Violation{best_x, -best};
    return std::nullopt;
}

} // namespace sincbounds
