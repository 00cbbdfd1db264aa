#pragma once

// Independent ground truth for the series results: real-axis quadrature of
// the action, the period as a direct integral and as hypergeometric closed
// form, and a direct simulation of Hamilton's equations.

#include "relosc/action.hpp"
#include "relosc/model.hpp"

#include <functional>
#include <stdexcept>

namespace relosc {

struct QuadratureConfig {
    int node_count = 32;       ///< per panel, >= 8
    int panel_count = 2;
    double target_rel_tol = 1e-13;  ///< >= 1e-14
    int max_refinements = 8;   ///< panel doublings before giving up

    void validate() const;
};

struct OdeConfig {
    int steps_per_period = 20000;  ///< >= 1e4
    int max_periods = 4;
    double max_energy_drift = 1e-9;  ///< relative, over the whole run

    void validate() const;
};

/// A numerical method did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double partial_result)
        : std::runtime_error(what), partial_(partial_result) {}
    double partial_result() const { return partial_; }

private:
    double partial_;
};

/// The integrator did not conserve energy to the configured tolerance.
class IntegratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureEstimate {
    double value;
    double error_estimate;  ///< |I(2n) - I(n)| at the accepted panel count
    int panels;
};

/// Smooth integrand on [a, b]; compares n and 2n nodes, doubling panels until
/// the estimate meets cfg.target_rel_tol. Throws ConvergenceError.
QuadratureEstimate integrate_to_tolerance(const std::function<double(double)>& f, double a,
                                          double b, const QuadratureConfig& cfg);

/// J = (2/pi) int_0^x2 p(x) dx with p = (k/2c) sqrt((x2^2 - x^2)(x4^2 - x^2)),
/// integrated in theta with x = x2 sin(theta).
ActionResult action_quadrature(const OscillatorParams& params, const EnergySpec& energy,
                               const QuadratureConfig& cfg = {});

/// Same integral for H = p^2/2m + k x^2/2 at energy E; equals E/omega0.
ActionResult action_quadrature_nonrel(const OscillatorParams& params, double energy,
                                      const QuadratureConfig& cfg = {});

/// J = (E~/omega0) sqrt(1 + eps/2) 2F1(-1/2, 1/2; 2; eps/(2+eps)).
ActionResult action_closed_form(const OscillatorParams& params, const EnergySpec& energy);

/// Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n for 0 <= z < 1.
/// Throws ConvergenceError (carrying the partial sum) if it has not converged
/// after 10^6 terms.
double hypergeometric_2f1(double a, double b, double c, double z);

/// tau = (4/c) int_0^x2 (E - V) / sqrt((E - V)^2 - m^2 c^4) dx.
double period_direct(const OscillatorParams& params, const EnergySpec& energy,
                     const QuadratureConfig& cfg = {});

/// tau = (2 pi/c) sqrt(2/k) [ sqrt(E~ + 2mc^2) 2F1(-1/2, 1/2; 1; kappa^2)
///                            - mc^2/sqrt(E~ + 2mc^2) 2F1(1/2, 1/2; 1; kappa^2) ],
/// kappa^2 = E~/(E~ + 2mc^2).
double period_closed_form(const OscillatorParams& params, const EnergySpec& energy);

struct SimulationResult {
    double period;
    double period_error;  ///< Richardson estimate from the step-halved run
    double action;        ///< (1/2pi) of the integral of p dx over one period
    double max_energy_drift;  ///< max |H(t) - E| / E
};

/// Classical RK4 on x' = p c^2 / sqrt(p^2 c^2 + m^2 c^4), p' = -k x from
/// (0, p2). Period from successive upward zero crossings of x, located by cubic
/// Hermite interpolation. Throws IntegratorError on energy drift.
SimulationResult simulate_period(const OscillatorParams& params, const EnergySpec& energy,
                                 const OdeConfig& cfg = {});

}  // namespace relosc
