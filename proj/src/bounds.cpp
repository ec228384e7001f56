#include "critwin/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace critwin {

namespace {

void need_r(int r, int least)
{
    if (r < least)
        throw std::invalid_argument("r must be at least " + std::to_string(least));
}

Rational y_coefficient(int r)
{
    return rat(r - 4, 2 * (r - 3));
}

} // namespace

std::string_view regime_name(Regime r)
{
    switch (r) {
    case Regime::upper:
        return "upper";
    case Regime::lower:
        return "lower";
    case Regime::in_range:
        return "in-range";
    case Regime::out_of_range_low:
        return "out-of-range-low";
    case Regime::out_of_range_high:
        return "out-of-range-high";
    }
    return "?";
}

Rational f1_window_low(int r) { return rat(2 * r - 5, 2 * r - 2); }
Rational f1_window_high(int r) { return rat(2 * r - 5, 2 * r - 3); }
Rational f1_breakpoint(int r) { return rat(5 * r - 13, 5 * r - 8); }

Rational f1_lower_branch(int r, const Rational& d)
{
    need_r(r, 3);
    return (rat(-4 * (r - 1)) * d * d + rat(4 * (2 * r - 5)) * d + (r - 3)) / (10 * r - 28);
}

Rational f1_upper_branch(int r, const Rational& d)
{
    need_r(r, 3);
    const std::int64_t r2 = std::int64_t{r} * r;
    return (rat(-5 * r2 + 17 * r - 14) * d * d + rat(10 * r2 - 44 * r + 46) * d + (-5 * r2 + 27 * r - 36)) / 2;
}

BoundEvaluation f1(int r, const Rational& delta)
{
    need_r(r, 3);
    BoundEvaluation e{1, r, delta, {}, Regime::lower};
    if (delta < f1_window_low(r))
        e.regime = Regime::out_of_range_low;
    else if (delta > f1_window_high(r))
        e.regime = Regime::out_of_range_high;
    else if (delta > f1_breakpoint(r))
        e.regime = Regime::upper;
    const bool upper = e.regime == Regime::upper || e.regime == Regime::out_of_range_high;
    e.value = upper ? f1_upper_branch(r, delta) : f1_lower_branch(r, delta);
    return e;
}

BoundEvaluation f2(int r, const Rational& d)
{
    need_r(r, 4);
    BoundEvaluation e{2, r, d, {}, Regime::in_range};
    if (d < rat(r - 3, r - 1))
        e.regime = Regime::out_of_range_low;
    else if (d > rat(r - 3, r - 2))
        e.regime = Regime::out_of_range_high;
    const Rational rest = 1 - d;
    e.value = d * rest + rest * rest / 4 + y_coefficient(r) * d * d;
    return e;
}

BoundEvaluation evaluate(int theorem, int r, const Rational& delta)
{
    if (theorem == 1)
        return f1(r, delta);
    if (theorem == 2)
        return f2(r, delta);
    throw std::invalid_argument("theorem must be 1 or 2");
}

TradeoffParams tradeoff_params(int r, Regime regime)
{
    need_r(r, 3);
    const std::int64_t r2 = std::int64_t{r} * r;
    if (regime == Regime::upper) {
        const std::int64_t d = 5 * r2 - 17 * r + 14;
        return {rat(d, 2), rat(5 * r2 - 22 * r + 23, d), rat(5 * r2 - 22 * r + 25, 2 * d), regime};
    }
    if (regime == Regime::lower)
        return {rat(2 * r - 2, 5 * r - 14), rat(2 * r - 5, 2 * r - 2), rat(r - 2, 2 * r - 2), regime};
    throw std::invalid_argument("trade-off parameters exist for the upper and lower regimes only");
}

Rational turan_density(int r)
{
    need_r(r, 2);
    return rat(r - 2, 2 * (r - 1));
}

double reduced_edge_bound(std::int64_t reduced_edges, std::int64_t n, std::int64_t k, double d, double eps)
{
    if (k <= 0 || n < 0 || reduced_edges < 0)
        throw std::invalid_argument("reduced_edge_bound: need k > 0 and nonnegative counts");
    if (!(d >= 0 && d < 1))
        throw std::invalid_argument("reduced_edge_bound: need 0 <= d < 1");
    if (!(eps > 0) || 1.0 > 2 * eps * static_cast<double>(k) * (1 + 1e-12))
        throw std::invalid_argument("reduced_edge_bound: need 1/k <= 2 eps");
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    return static_cast<double>(reduced_edges) * n2 / (static_cast<double>(k) * static_cast<double>(k)) +
           (d / 2 + 2 * eps) * n2;
}

Rational g_claim(const Rational& x, const Rational& y, int r)
{
    need_r(r, 4);
    return x * (1 - x) + y * (1 - x - y) + y_coefficient(r) * y * y;
}

double g_claim(double x, double y, int r)
{
    need_r(r, 4);
    const double c = static_cast<double>(r - 4) / (2.0 * (r - 3));
    return x * (1 - x) + y * (1 - x - y) + c * y * y;
}

Point lagrangian_stationary(int r, const Rational& delta)
{
    need_r(r, 4);
    const Rational den = 5 * r - 14;
    return {2 * (4 * delta - r * delta + (r - 3)) / den, (6 * delta - 1) * (r - 3) / den};
}

bool ClaimReport::ok(double tolerance) const
{
    if (!(max_excess <= tolerance) || feasible_points == 0)
        return false;
    if (stationary_checked && !(stationary_on_line && stationary_feasible && stationary_attains_bound))
        return false;
    if (boundary_checked && !(boundary_slope >= 0 && boundary_attains_bound))
        return false;
    return stationary_checked || boundary_checked;
}

ClaimReport verify_claim(int r, const Rational& delta, double grid_step)
{
    need_r(r, 4);
    const auto eval = f1(r, delta);
    if (!eval.in_range())
        throw std::invalid_argument("verify_claim: delta outside the window of the first bound");
    if (!(grid_step > 0) || grid_step > 1e-2)
        throw std::invalid_argument("verify_claim: grid step must lie in (0, 1e-2]");
    const auto divisions = std::llround(1.0 / grid_step);
    if (std::abs(static_cast<double>(divisions) * grid_step - 1.0) > 1e-9)
        throw std::invalid_argument("verify_claim: grid step must be 1/integer");

    ClaimReport rep;
    rep.r = r;
    rep.delta = delta;
    rep.regime = eval.regime;
    rep.bound = eval.value;
    rep.divisions = divisions;

    // Feasibility in exact integer form: j <= (r-3)(1-delta) N and
    // i + 2j >= 2 delta N for the point (i/N, j/N).
    using boost::multiprecision::cpp_int;
    const Rational y_cap = (r - 3) * (1 - delta) * divisions;
    const Rational line = 2 * delta * divisions;
    const auto floor_of = [](const Rational& q) {
        cpp_int f = numerator(q) / denominator(q);
        if (q < 0 && Rational(f) != q)
            --f;
        return f;
    };
    const std::int64_t j_max = std::min<std::int64_t>(divisions, floor_of(y_cap).convert_to<std::int64_t>());
    cpp_int line_ceil = -floor_of(-line);
    const std::int64_t need = line_ceil.convert_to<std::int64_t>();

    const double bound = to_double(eval.value);
    const double n = static_cast<double>(divisions);
    rep.max_excess = -std::numeric_limits<double>::infinity();
    for (std::int64_t j = 0; j <= j_max; ++j)
        for (std::int64_t i = std::max<std::int64_t>(0, need - 2 * j); i <= divisions; ++i) {
            const double x = static_cast<double>(i) / n, y = static_cast<double>(j) / n;
            const double excess = g_claim(x, y, r) - bound;
            ++rep.feasible_points;
            if (excess > rep.max_excess) {
                rep.max_excess = excess;
                rep.arg_x = x;
                rep.arg_y = y;
            }
        }

    if (eval.regime == Regime::lower) {
        rep.stationary_checked = true;
        rep.stationary = lagrangian_stationary(r, delta);
        const auto& [x, y] = rep.stationary;
        rep.stationary_on_line = x / 2 + y == delta;
        rep.stationary_feasible = x >= 0 && y >= 0 && x <= 1 && y <= 1 && y <= (r - 3) * (1 - delta);
        rep.stationary_attains_bound = g_claim(x, y, r) == eval.value;
    } else {
        rep.boundary_checked = true;
        const Rational y = (r - 3) * (1 - delta);
        // h'(y) = 6 delta - 1 - ((5r-14)/(r-3)) y
        rep.boundary_slope = 6 * delta - 1 - Rational(5 * r - 14, r - 3) * y;
        rep.boundary_attains_bound = g_claim(2 * delta - 2 * y, y, r) == eval.value;
    }
    return rep;
}

std::vector<BoundEvaluation> sweep(int theorem, int r, const Rational& from, const Rational& to, const Rational& step)
{
    if (from > to)
        throw std::invalid_argument("sweep: from must not exceed to");
    if (step <= 0)
        throw std::invalid_argument("sweep: step must be positive");
    std::vector<BoundEvaluation> rows;
    for (Rational d = from; d <= to; d += step)
        rows.push_back(evaluate(theorem, r, d));
    return rows;
}

std::string sweep_csv(const std::vector<BoundEvaluation>& rows)
{
    std::string out = "delta,value,regime\n";
    for (const auto& e : rows) {
        out += to_decimal(e.delta);
        out += ',';
        out += to_decimal(e.value);
        out += ',';
        out += regime_name(e.regime);
        out += '\n';
    }
    return out;
}

} // namespace critwin
