#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "harmonia/grid_geometry.hpp"
#include "harmonia/label.hpp"
#include "harmonia/labeling.hpp"

namespace harmonia {

// Inductive construction of a harmonic labeling of Z^2 on the growing
// diamond regions S_n. Each level adds four spanning values on the base
// rows: two fill values N1/N2 (largest negative / smallest positive integer
// not yet attained, restoring windowed surjectivity) on the lower corners
// and two escape values on the upper corners, then extends harmonically to
// the new ring. Injectivity is re-verified exactly against the whole label
// set; if any collision appears the escape values are scaled up and the
// level is redone.
//
// The literal construction uses factorial/exponential towers
// (10!, (10!)!, ... and 10^(N2-N1+N3)) whose later levels cannot be
// materialized; the default schedule replaces them with
// UL := T*Sigma, UR := T*(Sigma + UL), Sigma = sum of |labels|, T = 10^3,
// trading a priori size estimates for direct verification plus retry.
// paper_faithful mode keeps the towers, estimates digit counts up front,
// and refuses any level over the digit budget.

struct missing_dependency : std::runtime_error {
    GridPoint point;
    explicit missing_dependency(const GridPoint& p)
        : std::runtime_error("unlabeled dependency at " + to_key(p)), point(p) {}
};

struct retries_exhausted : std::runtime_error {
    int level;
    explicit retries_exhausted(int lvl)
        : std::runtime_error("escape escalation exhausted at level " + std::to_string(lvl)),
          level(lvl) {}
};

struct digit_budget_exceeded : std::runtime_error {
    double estimated_digits;
    explicit digit_budget_exceeded(const std::string& what, double digits)
        : std::runtime_error(what), estimated_digits(digits) {}
};

struct GrowthSchedule {
    Label v1, v2, v3, v4;     // step-1 base values for the upper spanning corners
    Label escalation = 1000;  // T
    int max_retries = 8;
    bool paper_faithful = false;
    double digit_budget = 1e6;

    static GrowthSchedule defaults() {
        GrowthSchedule s;
        s.v1 = pow(Label(10), 7);
        s.v2 = pow(Label(10), 14);
        s.v3 = pow(Label(10), 21);
        s.v4 = pow(Label(10), 28);
        return s;
    }

    void validate() const {
        if (escalation < 2) throw std::invalid_argument("escalation factor must be >= 2");
        if (max_retries < 0) throw std::invalid_argument("max retries must be >= 0");
        if (paper_faithful) return;  // base comes from the factorial tower instead
        if (!(v1 > 0 && v1 < v2 && v2 < v3 && v3 < v4))
            throw std::invalid_argument("base values must satisfy 0 < v1 < v2 < v3 < v4");
    }
};

namespace detail {

constexpr double kLog10E = 0.4342944819032518;

inline double log10_factorial(double n) {
    if (n < 1) return 0.0;
    if (n > 1e15) return std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) * kLog10E;
}

// Decimal digit estimates for the iterated-factorial tower
// 10!, (10!)!, ((10!)!)!, ... without materializing anything.
inline std::vector<double> factorial_tower_digits(int levels) {
    std::vector<double> digits;
    double log10_value = log10_factorial(10.0);  // 10!
    for (int i = 0; i < levels; ++i) {
        digits.push_back(std::floor(log10_value) + 1.0);
        // next = value!, log10(next) = log10_factorial(value)
        if (log10_value > 15.0) {
            log10_value = std::numeric_limits<double>::infinity();
        } else {
            log10_value = log10_factorial(std::pow(10.0, log10_value));
        }
    }
    return digits;
}

inline Label exact_factorial(const Label& n) {
    if (n > 100000000) throw std::overflow_error("factorial operand too large to materialize");
    Label r = 1;
    for (Label k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace detail

// f(x,y) for y >= 1 from the row below, or y <= -2 from the row above:
//   up:   f(x,y) = 4f(x,y-1) - f(x-1,y-1) - f(x+1,y-1) - f(x,y-2)
//   down: f(x,y) = 4f(x,y+1) - f(x-1,y+1) - f(x+1,y+1) - f(x,y+2)
inline Label extend_point(const PartialLabeling<GridPoint>& labeling, const GridPoint& p) {
    const std::int64_t dir = p.y >= 1 ? -1 : (p.y <= -2 ? 1 : 0);
    if (dir == 0)
        throw std::invalid_argument("base-row points are assigned, not extended: " + to_key(p));
    const GridPoint deps[4] = {{p.x, p.y + dir},
                               {p.x - 1, p.y + dir},
                               {p.x + 1, p.y + dir},
                               {p.x, p.y + 2 * dir}};
    const Label* v[4];
    for (int i = 0; i < 4; ++i) {
        v[i] = labeling.find(deps[i]);
        if (!v[i]) throw missing_dependency(deps[i]);
    }
    return 4 * (*v[0]) - (*v[1]) - (*v[2]) - (*v[3]);
}

struct GridCollision {
    GridPoint fresh;     // point whose computed value collided
    GridPoint existing;  // holder of the value
    Label value;
};

struct ExtendOutcome {
    std::vector<GridPoint> added;
    std::optional<GridCollision> collision;
};

// Labels every still-unlabeled point of S_n, rows outward from the base
// rows so each point's dependencies are ready. Stops at the first label
// collision and reports it; `added` lists insertions made either way so the
// caller can roll back.
inline ExtendOutcome extend_region(PartialLabeling<GridPoint>& labeling, std::int64_t n) {
    ExtendOutcome out;
    auto run_row = [&](std::int64_t y) -> bool {
        const std::int64_t half = (y >= 0) ? n - y : n + y + 1;
        for (std::int64_t x = -half; x <= half + 1; ++x) {
            const GridPoint p{x, y};
            if (labeling.has(p)) continue;
            Label value = extend_point(labeling, p);
            auto res = labeling.insert(p, value);
            if (!res.ok) {
                out.collision = GridCollision{p, *res.colliding_vertex, std::move(value)};
                return false;
            }
            out.added.push_back(p);
        }
        return true;
    };
    for (std::int64_t y = 1; y <= n; ++y)
        if (!run_row(y)) return out;
    for (std::int64_t y = -2; y >= -n - 1; --y)
        if (!run_row(y)) return out;
    return out;
}

struct StepDiagnostics {
    int level = 0;   // level reached by this step
    Label n1, n2;    // fill values assigned to the lower corners
    int retries = 0;
    Label escape_edge_min;  // min |label| over the new UL/UR edges
    Label prior_max_abs;    // max |label| before the step
    bool ring_dominance = false;  // escape_edge_min > 2 * prior_max_abs
};

struct GridLabelingState {
    int level = 0;
    PartialLabeling<GridPoint> labeling;
    Label abs_sum = 0;  // sum of |labels|; doubles as N3 in paper_faithful mode
    Label max_abs = 0;

    // Largest negative integer not attained.
    Label fill_negative() const {
        Label z = -1;
        while (labeling.uses(z)) --z;
        return z;
    }
    // Smallest positive integer not attained.
    Label fill_positive() const {
        Label z = 1;
        while (labeling.uses(z)) ++z;
        return z;
    }

    void account(const std::vector<GridPoint>& points) {
        for (const auto& p : points) {
            const Label& v = labeling.at(p);
            abs_sum += abs(v);
            if (abs(v) > max_abs) max_abs = abs(v);
        }
    }
};

namespace detail {

inline void assign_base(GridLabelingState& state, const Label& v1, const Label& v2,
                        const Label& v3, const Label& v4) {
    const std::pair<GridPoint, Label> base[8] = {
        {corner_point(0, Side::UL, 0), v1},  // (0,0)
        {corner_point(1, Side::UL, 0), v2},  // (-1,0)
        {corner_point(0, Side::UR, 0), v3},  // (1,0)
        {corner_point(1, Side::UR, 0), v4},  // (2,0)
        {corner_point(0, Side::LL, 0), 0},   // (0,-1)
        {corner_point(1, Side::LL, 0), -1},  // (-1,-1)
        {corner_point(0, Side::LR, 0), 1},   // (1,-1)
        {corner_point(1, Side::LR, 0), 2},   // (2,-1)
    };
    std::vector<GridPoint> added;
    for (const auto& [p, v] : base) {
        if (!state.labeling.insert(p, v).ok)
            throw std::invalid_argument("schedule base values collide");
        added.push_back(p);
    }
    auto ext = extend_region(state.labeling, 1);
    if (ext.collision)
        throw std::invalid_argument("schedule base values collide on the first ring");
    for (const auto& p : ext.added) added.push_back(p);
    state.account(added);
    state.level = 1;
}

inline Label faithful_power_of_ten(const Label& exponent, double budget) {
    const double digits = exponent.convert_to<double>() + 1.0;
    if (!(digits <= budget))
        throw digit_budget_exceeded("tower value of ~" + std::to_string(digits) +
                                        " digits exceeds the digit budget",
                                    digits);
    return pow(Label(10), exponent.convert_to<unsigned>());
}

}  // namespace detail

// Step 1: the base configuration on S_1 (8 spanning values, 4 ring values).
inline GridLabelingState grid_base(const GrowthSchedule& schedule) {
    schedule.validate();
    GridLabelingState state;
    if (!schedule.paper_faithful) {
        detail::assign_base(state, schedule.v1, schedule.v2, schedule.v3, schedule.v4);
        return state;
    }
    const auto digits = detail::factorial_tower_digits(4);
    for (int i = 0; i < 4; ++i)
        if (!(digits[i] <= schedule.digit_budget))
            throw digit_budget_exceeded(
                "base tower value " + std::to_string(i + 1) + " needs ~" +
                    std::to_string(digits[i]) + " digits, over the budget",
                digits[i]);
    Label v1 = detail::exact_factorial(10);
    Label v2 = detail::exact_factorial(v1);
    Label v3 = detail::exact_factorial(v2);
    Label v4 = detail::exact_factorial(v3);
    detail::assign_base(state, v1, v2, v3, v4);
    return state;
}

// One induction step: assign the four new spanning values, extend to the
// next ring, verify injectivity exactly (rolling back and escalating the
// escapes on any collision), and record the ring-dominance diagnostic for
// the two escape edges.
inline StepDiagnostics induction_step(GridLabelingState& state, const GrowthSchedule& schedule) {
    const std::int64_t next = state.level + 1;
    StepDiagnostics diag;
    diag.level = static_cast<int>(next);
    diag.n1 = state.fill_negative();
    diag.n2 = state.fill_positive();
    diag.prior_max_abs = state.max_abs;

    Label escape_ul, escape_ur;
    if (schedule.paper_faithful) {
        const Label exponent = diag.n2 - diag.n1 + state.abs_sum;  // N2 - N1 + N3
        escape_ul = detail::faithful_power_of_ten(exponent, schedule.digit_budget);
        escape_ur = detail::faithful_power_of_ten(escape_ul, schedule.digit_budget);
    } else {
        escape_ul = schedule.escalation * state.abs_sum;
        escape_ur = schedule.escalation * (state.abs_sum + escape_ul);
    }

    for (int attempt = 0; attempt <= schedule.max_retries; ++attempt) {
        diag.retries = attempt;
        std::vector<GridPoint> added;
        bool clean = true;
        const std::pair<GridPoint, Label> spanning[4] = {
            {corner_point(next, Side::LL, 0), diag.n1},
            {corner_point(next, Side::LR, 0), diag.n2},
            {corner_point(next, Side::UL, 0), escape_ul},
            {corner_point(next, Side::UR, 0), escape_ur},
        };
        for (const auto& [p, v] : spanning) {
            if (!state.labeling.insert(p, v).ok) {
                clean = false;
                break;
            }
            added.push_back(p);
        }
        if (clean) {
            auto ext = extend_region(state.labeling, next);
            for (const auto& p : ext.added) added.push_back(p);
            clean = !ext.collision.has_value();
        }
        if (clean) {
            state.account(added);
            state.level = static_cast<int>(next);
            bool first = true;
            for (Side s : {Side::UL, Side::UR})
                for (const auto& p : diamond_boundary(next, s)) {
                    const Label m = abs(state.labeling.at(p));
                    if (first || m < diag.escape_edge_min) diag.escape_edge_min = m;
                    first = false;
                }
            diag.ring_dominance = diag.escape_edge_min > 2 * diag.prior_max_abs;
            return diag;
        }
        for (const auto& p : added) state.labeling.erase(p);
        escape_ul *= schedule.escalation;
        escape_ur *= schedule.escalation;
    }
    throw retries_exhausted(static_cast<int>(next));
}

struct GridBuild {
    GridLabelingState state;
    std::vector<StepDiagnostics> steps;
};

// Builds the labeling out to S_max(1, steps). Every interior point of the
// final region is exactly harmonic, the label set is injective by
// construction, and [-n, n+1] is attained at level n.
inline GridBuild build_grid_labeling(const GrowthSchedule& schedule, int steps) {
    GridBuild build{grid_base(schedule), {}};
    while (build.state.level < steps)
        build.steps.push_back(induction_step(build.state, schedule));
    return build;
}

// Two-sided edge estimates. Each boundary value should be the alternating
// combination of the corner values at the two previous scales, within a
// fraction i/(i+1) of the smaller scale. Holds when successive escape scales
// are far apart (faithful towers); milder schedules may fail them while
// injectivity still holds, so the result is a diagnostic report, not an
// invariant.
struct EdgeEstimateEntry {
    Side side;
    std::int64_t i;
    bool corner;
    bool passed;
};

struct EdgeEstimateReport {
    int level = 0;
    std::vector<EdgeEstimateEntry> entries;
    bool all_passed = true;
};

inline EdgeEstimateReport check_edge_estimates(const GridLabelingState& state) {
    const std::int64_t n = state.level;
    EdgeEstimateReport report;
    report.level = static_cast<int>(n);
    const auto& lab = state.labeling;
    auto corner0 = [&](std::int64_t k, Side s) -> const Label& {
        return lab.at(corner_point(k, s, 0));
    };
    auto record = [&](Side side, std::int64_t i, bool corner, const Label& actual,
                      const Label& base, const Label& band_ref) {
        // actual == base +- (i/(i+1)) * |band_ref|, compared exactly:
        const bool ok = (i + 1) * abs(actual - base) <= i * abs(band_ref);
        report.entries.push_back({side, i, corner, ok});
        report.all_passed = report.all_passed && ok;
    };
    const Label sign[2] = {1, -1};
    auto alt = [&](std::int64_t i) -> const Label& { return sign[i & 1]; };

    if (n >= 2) {
        for (auto [side, opposite] : {std::pair{Side::UL, Side::UR}, {Side::UR, Side::UL}}) {
            const Label& top = corner0(n, side);
            const Label& prev = corner0(n - 1, side);
            for (std::int64_t i = 1; i < n; ++i)
                record(side, i, false, lab.at(corner_point(n, side, i)),
                       alt(i) * (top - 4 * i * prev), prev);
            record(side, n, true, lab.at(corner_point(n, side, n)),
                   alt(n) * (top - 4 * n * prev + corner0(n, opposite)), prev);
        }
    }
    if (n >= 2) {
        for (auto [side, upper, opposite] :
             {std::tuple{Side::LL, Side::UL, Side::UR}, {Side::LR, Side::UR, Side::UL}}) {
            const Label& prev = corner0(n - 1, upper);
            const Label& prev2 = corner0(n - 2, upper);
            const Label& band2 = corner0(n - 2, Side::UL);
            for (std::int64_t i = 2; i < n; ++i)
                record(side, i, false, lab.at(corner_point(n, side, i)),
                       alt(i + 1) * (prev - 4 * (i - 1) * prev2), prev2);
            record(side, n, true, lab.at(corner_point(n, side, n)),
                   alt(n) * (prev - 4 * n * prev2 + corner0(n - 1, opposite)),
                   side == Side::LL ? prev2 : band2);
        }
    }
    return report;
}

// CSV heatmap of sign(f) * log10(1 + |f|) over S_n.
inline void write_heatmap_csv(const GridLabelingState& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open heatmap file: " + path);
    out << "x,y,intensity\n";
    for (const auto& p : DiamondRegion(state.level).points()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", signed_log10(state.labeling.at(p)));
        out << p.x << "," << p.y << "," << buf << "\n";
    }
}

}  // namespace harmonia
