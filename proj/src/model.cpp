#include "relosc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relosc {

OscillatorParams::OscillatorParams(double mass, double spring_constant, double light_speed)
    : mass_(mass), spring_constant_(spring_constant), light_speed_(light_speed)
{
    auto check = [](double v, const char* name) {
        if (!(std::isfinite(v) && v > 0.0))
            throw std::domain_error(std::string(name) + " must be positive");
    };
    check(mass, "mass");
    check(spring_constant, "spring constant");
    check(light_speed, "light speed");
}

double omega0(const OscillatorParams& params)
{
    return std::sqrt(params.spring_constant() / params.mass());
}

EnergySpec energy_from_epsilon(const OscillatorParams& params, double epsilon)
{
    if (!(std::isfinite(epsilon) && epsilon > 0.0))
        throw std::domain_error("epsilon must be positive (no oscillation otherwise)");
    return EnergySpec(epsilon, params.rest_energy());
}

TurningPointsX turning_points_x(const OscillatorParams& params, const EnergySpec& energy)
{
    const double eps = energy.epsilon();
    const double inner = std::sqrt(2.0 * energy.excess_energy() / params.spring_constant());
    return {inner, inner * std::sqrt(1.0 + 2.0 / eps), eps / (2.0 + eps)};
}

TurningPointsP turning_points_p(const OscillatorParams& params, const EnergySpec& energy)
{
    const double eps = energy.epsilon();
    const double mc = params.mass() * params.light_speed();
    const double inner =
        std::sqrt(2.0 * params.mass() * energy.excess_energy() * (1.0 + 0.5 * eps));
    const double ratio_sq = eps * (2.0 + eps);
    return {inner, mc, ratio_sq, ratio_sq < 1.0};
}

}  // namespace relosc
