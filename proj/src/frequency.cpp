#include "relosc/frequency.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace relosc {

namespace {

FormalSeries build_eta_series(int order, SeriesForm form)
{
    const int n = order + 1;
    const BracketSeries& brackets = bracket_series(n);
    const FormalSeries& bracket =
        form == SeriesForm::pdx ? brackets.pdx_bracket_in_eps : brackets.xdp_bracket;
    const FormalSeries prefactor = sqrt(FormalSeries::constant("eps", 1, n) +
                                        FormalSeries::monomial("eps", Rational(1, 2), 1, n));
    return differentiate(FormalSeries::monomial("eps", 1, 1, n) * prefactor * bracket);
}

}  // namespace

FormalSeries eta_series(int order, SeriesForm form)
{
    if (order < 1)
        throw std::invalid_argument("eta series needs order >= 1");
    static std::mutex mutex;
    static std::map<std::pair<int, SeriesForm>, std::unique_ptr<const FormalSeries>> cache;

    std::lock_guard lock(mutex);
    auto key = std::make_pair(order, form);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<const FormalSeries>(build_eta_series(order, form)))
                 .first;
    return *it->second;
}

FrequencyResult make_frequency_result(const OscillatorParams& params, double omega, Method method,
                                      int order, double eta_error, Flags flags)
{
    return {omega, 2.0 * std::numbers::pi / omega, omega0(params) / omega, method, order,
            eta_error, flags};
}

FrequencyResult frequency_from_action(const OscillatorParams& params, const EnergySpec& energy,
                                      int order, SeriesForm form)
{
    const double eps = energy.epsilon();
    Flags flags = regime_flags(eps);

    double eta = 0.0;
    double error = 0.0;
    if (form == SeriesForm::xdp) {
        const auto v = eval(eta_series(order, SeriesForm::xdp), eps);
        eta = v.value;
        error = v.last_term;
        if (eps >= xdp_convergence_guard)
            flags.set(Flag::diverging);
    } else {
        // d/deps [eps g B(r)] = g B + eps g' B + eps g B'(r) r',
        // g = sqrt(1 + eps/2), g' = 1/(4g), r = eps/(2+eps), r' = 2/(2+eps)^2.
        const FormalSeries& bracket = bracket_series(order).pdx_bracket;
        const double r = eps / (2.0 + eps);
        const auto b = eval(bracket, r);
        const auto db = eval(differentiate(bracket), r);
        const double g = std::sqrt(1.0 + 0.5 * eps);
        const double dr = 2.0 / ((2.0 + eps) * (2.0 + eps));
        const double direct = g + eps / (4.0 * g);
        eta = direct * b.value + eps * g * dr * db.value;
        error = direct * b.last_term + eps * g * dr * db.last_term;
    }

    const Method method = form == SeriesForm::pdx ? Method::pdx_series : Method::xdp_series;
    return make_frequency_result(params, omega0(params) / eta, method, order, error, flags);
}

FrequencyResult frequency_nonrel(const OscillatorParams& params)
{
    return make_frequency_result(params, omega0(params), Method::nonrel_closed, 0, 0.0, {});
}

}  // namespace relosc
