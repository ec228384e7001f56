#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "critwin/rational.hpp"

namespace critwin {

enum class Regime { upper, lower, in_range, out_of_range_low, out_of_range_high };

std::string_view regime_name(Regime r);

struct BoundEvaluation {
    int theorem = 1;
    int r = 0;
    Rational delta;
    Rational value;
    Regime regime = Regime::lower;

    bool in_range() const { return regime != Regime::out_of_range_low && regime != Regime::out_of_range_high; }
};

// The window of the first bound, (2r-5)/(2r-2) <= delta <= (2r-5)/(2r-3),
// and the breakpoint (5r-13)/(5r-8) that belongs to the lower branch.
Rational f1_window_low(int r);
Rational f1_window_high(int r);
Rational f1_breakpoint(int r);

// The two quadratics, valid for any delta.
Rational f1_lower_branch(int r, const Rational& delta);
Rational f1_upper_branch(int r, const Rational& delta);

// Outside the window the value comes from the nearer branch and the regime
// says out-of-range. Throws std::invalid_argument for r < 3.
BoundEvaluation f1(int r, const Rational& delta);

// delta(1-delta) + (1-delta)^2/4 + (r-4)delta^2/(2(r-3)); in range when
// (r-3)/(r-1) <= delta <= (r-3)/(r-2). Throws for r < 4.
BoundEvaluation f2(int r, const Rational& delta);

BoundEvaluation evaluate(int theorem, int r, const Rational& delta);

// f1 = C - A(delta - B)^2 on the given branch (upper or lower).
struct TradeoffParams {
    Rational a, b, c;
    Regime regime = Regime::lower;
};
TradeoffParams tradeoff_params(int r, Regime regime);

// (r-2)/(2(r-1)), the edge density of T_{r-1}(n).
Rational turan_density(int r);

// e(R) n^2/k^2 + (d/2 + 2 eps) n^2. Requires 1/k <= 2 eps and 0 <= d < 1.
double reduced_edge_bound(std::int64_t reduced_edges, std::int64_t n, std::int64_t k, double d, double eps);

// x(1-x) + y(1-x-y) + (r-4)/(2(r-3)) y^2, for r >= 4.
Rational g_claim(const Rational& x, const Rational& y, int r);
double g_claim(double x, double y, int r);

struct Point {
    Rational x, y;
};
// Critical point of g on the line x/2 + y = delta.
Point lagrangian_stationary(int r, const Rational& delta);

struct ClaimReport {
    int r = 0;
    Rational delta;
    Regime regime = Regime::lower;
    Rational bound; // f1(r, delta)
    std::int64_t divisions = 0;
    std::int64_t feasible_points = 0;
    double max_excess = 0; // max of g - f1 over the grid
    double arg_x = 0, arg_y = 0;
    // Lower regime: the stationary point lies on x/2 + y = delta, is
    // feasible and attains f1 exactly.
    bool stationary_checked = false;
    Point stationary;
    bool stationary_on_line = false;
    bool stationary_feasible = false;
    bool stationary_attains_bound = false;
    // Upper regime: h(y) = g(2 delta - 2y, y) is still increasing at
    // y = (r-3)(1-delta), and equals f1 there.
    bool boundary_checked = false;
    Rational boundary_slope;
    bool boundary_attains_bound = false;

    bool ok(double tolerance = 1e-9) const;
};

// Scans {x, y on a 1/divisions grid in [0,1]: y <= (r-3)(1-delta),
// x/2 + y >= delta} and runs the exact checks for the regime. Throws for
// r < 4, delta outside the window, or a step that is not 1/integer.
ClaimReport verify_claim(int r, const Rational& delta, double grid_step = 1e-3);

// Rows at from, from+step, ... up to and including to.
std::vector<BoundEvaluation> sweep(int theorem, int r, const Rational& from, const Rational& to, const Rational& step);

// "delta,value,regime" then one line per row, decimals to 12 significant
// digits.
std::string sweep_csv(const std::vector<BoundEvaluation>& rows);

} // namespace critwin
