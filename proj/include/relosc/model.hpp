#pragma once

// Physical model of the one-dimensional relativistic harmonic oscillator
//   H(x, p) = sqrt(p^2 c^2 + m^2 c^4) + k x^2 / 2
// together with the energy bookkeeping and the branch-point geometry in the
// coordinate and momentum planes.

namespace relosc {

/// Mass, spring constant and light speed. All strictly positive.
class OscillatorParams {
public:
    OscillatorParams() = default;
    OscillatorParams(double mass, double spring_constant, double light_speed);

    double mass() const { return mass_; }
    double spring_constant() const { return spring_constant_; }
    double light_speed() const { return light_speed_; }

    /// m c^2
    double rest_energy() const { return mass_ * light_speed_ * light_speed_; }

private:
    double mass_ = 1.0;
    double spring_constant_ = 1.0;
    double light_speed_ = 1.0;
};

/// Non-relativistic angular frequency sqrt(k/m).
double omega0(const OscillatorParams& params);

/// Energy of a bound orbit. The dimensionless excess energy epsilon = E~/(m c^2)
/// is authoritative; the excess and total energies are derived from it.
class EnergySpec {
public:
    double epsilon() const { return epsilon_; }
    double excess_energy() const { return excess_energy_; }
    double total_energy() const { return total_energy_; }

private:
    friend EnergySpec energy_from_epsilon(const OscillatorParams&, double);
    EnergySpec(double epsilon, double rest_energy)
        : epsilon_(epsilon), excess_energy_(epsilon * rest_energy),
          total_energy_((1.0 + epsilon) * rest_energy) {}

    double epsilon_;
    double excess_energy_;
    double total_energy_;
};

/// Throws std::domain_error unless epsilon is finite and strictly positive.
EnergySpec energy_from_epsilon(const OscillatorParams& params, double epsilon);

/// Real branch points of p(x): +-inner are the physical turning points,
/// +-outer the relativistic ones.
struct TurningPointsX {
    double inner;
    double outer;
    double ratio_sq;  ///< (inner/outer)^2 = eps/(2+eps)
};

/// Branch points of x(p): +-inner are the turning momenta, +-i*outer_magnitude
/// (outer_magnitude = m c) the relativistic ones on the imaginary axis.
struct TurningPointsP {
    double inner;
    double outer_magnitude;
    double ratio_sq;  ///< (inner/outer_magnitude)^2 = 2 eps (1 + eps/2)
    bool annulus_nonempty;  ///< inner < outer_magnitude, i.e. eps < sqrt(2) - 1
};

TurningPointsX turning_points_x(const OscillatorParams& params, const EnergySpec& energy);
TurningPointsP turning_points_p(const OscillatorParams& params, const EnergySpec& energy);

}  // namespace relosc
