#pragma once

// The action variable J(E) of the relativistic harmonic oscillator.
//
// Both contour-integral forms reduce to a residue: J = (E~/omega0) *
// sqrt(1 + eps/2) * bracket, where the bracket is an exact rational series.
//   p dx form:  bracket is a series in r = eps/(2+eps)  (converges for all eps)
//   -x dp form: bracket is a series in eps directly
// Both brackets describe the same function; re-expanding the p dx bracket in
// eps reproduces the -x dp bracket coefficient by coefficient.

#include "relosc/fps.hpp"
#include "relosc/model.hpp"
#include "relosc/tags.hpp"

#include <vector>

namespace relosc {

inline constexpr int default_series_order = 32;

/// The -x dp series is flagged `diverging` at and above this epsilon.
inline constexpr double xdp_convergence_guard = 0.4;

struct ActionResult {
    double value;
    Method method;
    int order;  ///< 0 for closed forms
    double error_estimate;
    Flags flags;
};

/// J = E/omega0 for H = p^2/2m + k x^2/2 at energy E.
ActionResult action_nonrel(const OscillatorParams& params, double energy);

/// The p dx bracket B(r), variable "r", built by multiplying the two binomial
/// series sqrt(1 - (x2/x)^2) and sqrt(1 - (x/x4)^2) and extracting the x^-1
/// coefficient.
FormalSeries pdx_bracket_series(int order);

/// The same bracket from c_b = 2 C(1/2, b+1) C(1/2, b).
FormalSeries pdx_bracket_closed_form(int order);

/// r(eps) = eps/(2+eps) as a series in "eps".
FormalSeries ratio_series(int order);

/// B(r(eps)), variable "eps".
FormalSeries pdx_bracket_in_epsilon(int order);

/// Coefficients f_j(eps) of the analytic factor f(s; eps) = sum_j f_j(eps) s^j,
/// s = p^2/(m c)^2, in x(p) = -i sqrt(2E~/k) (p/p2) sqrt(1 - (p2/p)^2) f.
/// Uses f^2 = (2 + eps) / ((1 + eps) + sqrt(1 + s)). Each f_j is a series in
/// "eps" of the given order; j runs 0..order.
std::vector<FormalSeries> momentum_shape_coefficients(int order);

/// The -x dp bracket, variable "eps".
FormalSeries xdp_bracket_series(int order);

struct BracketSeries {
    FormalSeries pdx_bracket;         ///< in r
    FormalSeries xdp_bracket;         ///< in eps
    FormalSeries pdx_bracket_in_eps;  ///< in eps
};

/// All three brackets, memoized per order. Safe to call concurrently.
const BracketSeries& bracket_series(int order);

ActionResult action_pdx(const OscillatorParams& params, const EnergySpec& energy,
                        int order = default_series_order);

/// Flags `diverging` for eps >= xdp_convergence_guard.
ActionResult action_xdp(const OscillatorParams& params, const EnergySpec& energy,
                        int order = default_series_order);

}  // namespace relosc
