#include "relosc/oracle.hpp"

#include "relosc/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace relosc {

namespace {

constexpr double pi = std::numbers::pi;

struct PhasePoint {
    double x;
    double p;
    double action;  // running integral of p dx
};

struct PhaseRate {
    double dx;
    double dp;
    double daction;
};

class RelativisticOscillator {
public:
    explicit RelativisticOscillator(const OscillatorParams& params)
        : c2_(params.light_speed() * params.light_speed()),
          m2c4_(params.rest_energy() * params.rest_energy()),
          k_(params.spring_constant()) {}

    PhaseRate rate(const PhasePoint& s) const
    {
        const double v = s.p * c2_ / std::sqrt(s.p * s.p * c2_ + m2c4_);
        return {v, -k_ * s.x, s.p * v};
    }

    double energy(const PhasePoint& s) const
    {
        return std::sqrt(s.p * s.p * c2_ + m2c4_) + 0.5 * k_ * s.x * s.x;
    }

    PhasePoint rk4_step(const PhasePoint& s, double h) const
    {
        auto shift = [](const PhasePoint& a, const PhaseRate& r, double dt) {
            return PhasePoint{a.x + dt * r.dx, a.p + dt * r.dp, a.action + dt * r.daction};
        };
        const PhaseRate k1 = rate(s);
        const PhaseRate k2 = rate(shift(s, k1, 0.5 * h));
        const PhaseRate k3 = rate(shift(s, k2, 0.5 * h));
        const PhaseRate k4 = rate(shift(s, k3, h));
        return {s.x + h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx),
                s.p + h / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp),
                s.action + h / 6.0 * (k1.daction + 2.0 * k2.daction + 2.0 * k3.daction +
                                      k4.daction)};
    }

private:
    double c2_;
    double m2c4_;
    double k_;
};

// Cubic Hermite interpolant on [0, 1] (values y0, y1; derivatives scaled by h).
double hermite(double s, double y0, double y1, double d0, double d1, double h)
{
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * d0 + (-2 * s3 + 3 * s2) * y1 +
           (s3 - s2) * h * d1;
}

struct RunResult {
    double period;
    double action;
    double drift;
};

RunResult integrate_cycles(const RelativisticOscillator& osc, double p_start, double energy,
                           double h, int periods, long max_steps)
{
    PhasePoint s{0.0, p_start, 0.0};
    PhaseRate r = osc.rate(s);
    double t = 0.0;
    double drift = 0.0;
    int crossings = 0;
    for (long step = 0; step < max_steps; ++step) {
        const PhasePoint next = osc.rk4_step(s, h);
        const PhaseRate next_r = osc.rate(next);
        drift = std::max(drift, std::abs(osc.energy(next) - energy) / energy);

        if (s.x < 0.0 && next.x >= 0.0 && ++crossings == periods) {
            double lo = 0.0, hi = 1.0;
            for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
                const double mid = 0.5 * (lo + hi);
                if (hermite(mid, s.x, next.x, r.dx, next_r.dx, h) < 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            const double frac = 0.5 * (lo + hi);
            const double action =
                hermite(frac, s.action, next.action, r.daction, next_r.daction, h);
            return {(t + frac * h) / periods, action / (2.0 * pi * periods), drift};
        }
        s = next;
        r = next_r;
        t += h;
    }
    throw ConvergenceError("simulate_period: no zero crossing found", t);
}

}  // namespace

void QuadratureConfig::validate() const
{
    if (node_count < 8)
        throw std::invalid_argument("QuadratureConfig: node_count must be >= 8");
    if (panel_count < 1)
        throw std::invalid_argument("QuadratureConfig: panel_count must be positive");
    if (!(target_rel_tol >= 1e-14))
        throw std::invalid_argument("QuadratureConfig: target_rel_tol must be >= 1e-14");
    if (max_refinements < 0)
        throw std::invalid_argument("QuadratureConfig: max_refinements must be >= 0");
}

void OdeConfig::validate() const
{
    if (steps_per_period < 10000)
        throw std::invalid_argument("OdeConfig: steps_per_period must be >= 1e4");
    if (max_periods < 1)
        throw std::invalid_argument("OdeConfig: max_periods must be positive");
    if (!(max_energy_drift > 0.0))
        throw std::invalid_argument("OdeConfig: max_energy_drift must be positive");
}

QuadratureEstimate integrate_to_tolerance(const std::function<double(double)>& f, double a,
                                          double b, const QuadratureConfig& cfg)
{
    cfg.validate();
    const auto coarse = quadrature::gauss_legendre(cfg.node_count);
    const auto fine = quadrature::gauss_legendre(2 * cfg.node_count);
    int panels = cfg.panel_count;
    double value = 0.0;
    double error = 0.0;
    for (int round = 0; round <= cfg.max_refinements; ++round, panels *= 2) {
        const double lo = quadrature::integrate(f, a, b, coarse, panels);
        value = quadrature::integrate(f, a, b, fine, panels);
        error = std::abs(value - lo);
        if (error <= cfg.target_rel_tol * std::abs(value))
            return {value, error, panels};
    }
    throw ConvergenceError("quadrature did not reach the target tolerance", value);
}

ActionResult action_quadrature(const OscillatorParams& params, const EnergySpec& energy,
                               const QuadratureConfig& cfg)
{
    const TurningPointsX tp = turning_points_x(params, energy);
    const double k = params.spring_constant();
    const double x2sq = tp.inner * tp.inner;
    const double gap = 4.0 * params.rest_energy() / k;  // x4^2 - x2^2
    const double front = k / (2.0 * params.light_speed()) * x2sq;
    auto integrand = [&](double theta) {
        const double cs = std::cos(theta);
        return front * cs * cs * std::sqrt(gap + x2sq * cs * cs);
    };
    const auto q = integrate_to_tolerance(integrand, 0.0, 0.5 * pi, cfg);
    return {2.0 / pi * q.value, Method::quadrature, 0, 2.0 / pi * q.error_estimate,
            regime_flags(energy.epsilon())};
}

ActionResult action_quadrature_nonrel(const OscillatorParams& params, double energy,
                                      const QuadratureConfig& cfg)
{
    if (!(std::isfinite(energy) && energy > 0.0))
        throw std::domain_error("energy must be positive");
    const double x2sq = 2.0 * energy / params.spring_constant();
    const double front = std::sqrt(params.mass() * params.spring_constant()) * x2sq;
    auto integrand = [&](double theta) {
        const double cs = std::cos(theta);
        return front * cs * cs;
    };
    const auto q = integrate_to_tolerance(integrand, 0.0, 0.5 * pi, cfg);
    return {2.0 / pi * q.value, Method::quadrature, 0, 2.0 / pi * q.error_estimate, {}};
}

ActionResult action_closed_form(const OscillatorParams& params, const EnergySpec& energy)
{
    const double eps = energy.epsilon();
    const double f = hypergeometric_2f1(-0.5, 0.5, 2.0, eps / (2.0 + eps));
    const double j = energy.excess_energy() / omega0(params) * std::sqrt(1.0 + 0.5 * eps) * f;
    return {j, Method::closed_form, 0, std::abs(j) * std::numeric_limits<double>::epsilon(),
            regime_flags(eps)};
}

double hypergeometric_2f1(double a, double b, double c, double z)
{
    if (c <= 0.0 && c == std::floor(c))
        throw std::domain_error("2F1: c must not be a non-positive integer");
    if (!(z >= 0.0 && z < 1.0))
        throw std::domain_error("2F1: z must lie in [0, 1)");
    double term = 1.0;
    double sum = 1.0;
    for (long n = 0; n <= 1000000; ++n) {
        term *= (a + n) * (b + n) * z / ((c + n) * (n + 1));
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum))
            return sum;
    }
    throw ConvergenceError("2F1 series did not converge", sum);
}

double period_direct(const OscillatorParams& params, const EnergySpec& energy,
                     const QuadratureConfig& cfg)
{
    // With x = x2 sin(theta): E - V = mc^2 + E~ cos^2, and the square root's
    // (x2^2 - x^2) factor cancels against dx.
    const double rest = params.rest_energy();
    const double excess = energy.excess_energy();
    const double root_half_k = std::sqrt(0.5 * params.spring_constant());
    auto integrand = [&](double theta) {
        const double cs = std::cos(theta);
        const double kinetic = rest + excess * cs * cs;  // E - V
        return kinetic / (root_half_k * std::sqrt(kinetic + rest));
    };
    const auto q = integrate_to_tolerance(integrand, 0.0, 0.5 * pi, cfg);
    return 4.0 / params.light_speed() * q.value;
}

double period_closed_form(const OscillatorParams& params, const EnergySpec& energy)
{
    const double rest = params.rest_energy();
    const double big = energy.excess_energy() + 2.0 * rest;
    const double kappa_sq = energy.excess_energy() / big;
    const double root = std::sqrt(big);
    const double bracket = root * hypergeometric_2f1(-0.5, 0.5, 1.0, kappa_sq) -
                           rest / root * hypergeometric_2f1(0.5, 0.5, 1.0, kappa_sq);
    return 2.0 * pi / params.light_speed() * std::sqrt(2.0 / params.spring_constant()) * bracket;
}

SimulationResult simulate_period(const OscillatorParams& params, const EnergySpec& energy,
                                 const OdeConfig& cfg)
{
    cfg.validate();
    double estimate;
    try {
        estimate = period_closed_form(params, energy);
    } catch (const ConvergenceError&) {
        estimate = period_direct(params, energy);
    }

    const RelativisticOscillator osc(params);
    const double p_start = turning_points_p(params, energy).inner;
    const double h = estimate / cfg.steps_per_period;
    const long max_steps = 2L * (cfg.max_periods + 1) * cfg.steps_per_period;

    const RunResult coarse =
        integrate_cycles(osc, p_start, energy.total_energy(), h, cfg.max_periods, max_steps);
    const RunResult fine = integrate_cycles(osc, p_start, energy.total_energy(), 0.5 * h,
                                            cfg.max_periods, 2 * max_steps);
    const double drift = std::max(coarse.drift, fine.drift);
    if (drift > cfg.max_energy_drift)
        throw IntegratorError("simulate_period: relative energy drift " + std::to_string(drift) +
                              " exceeds tolerance");
    return {fine.period, std::abs(fine.period - coarse.period) / 15.0, fine.action, drift};
}

}  // namespace relosc
