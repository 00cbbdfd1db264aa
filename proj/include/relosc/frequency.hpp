#pragma once

// Oscillation frequency from the action: 1/omega = dJ/dE~. In dimensionless
// form omega0/omega = eta(eps) = d/deps [eps sqrt(1 + eps/2) bracket(eps)].

#include "relosc/action.hpp"

namespace relosc {

enum class SeriesForm { pdx, xdp };

struct FrequencyResult {
    double omega;
    double period;
    double eta;  ///< omega0 / omega
    Method method;
    int order;
    double error_estimate;  ///< on eta
    Flags flags;
};

/// eta(eps) as an exact series in "eps" of the given order (>= 1). The pdx and
/// xdp forms yield identical series.
FormalSeries eta_series(int order, SeriesForm form);

/// pdx form: eta is evaluated through the chain rule on the r-series bracket
/// and its exact derivative, so it converges for every eps. xdp form: the
/// eps-series above is evaluated directly and inherits the xdp divergence flag.
FrequencyResult frequency_from_action(const OscillatorParams& params, const EnergySpec& energy,
                                      int order = default_series_order,
                                      SeriesForm form = SeriesForm::pdx);

/// Energy-independent omega0.
FrequencyResult frequency_nonrel(const OscillatorParams& params);

/// Wraps a known angular frequency (omega > 0) into a result with period and eta.
FrequencyResult make_frequency_result(const OscillatorParams& params, double omega, Method method,
                                      int order, double eta_error, Flags flags);

}  // namespace relosc
