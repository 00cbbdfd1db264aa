#include "relosc/action.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace relosc {

namespace {

/// sqrt(1 - v) as a series in `var`.
FormalSeries sqrt_one_minus(const std::string& var, int order)
{
    return sqrt(FormalSeries::constant(var, 1, order) - FormalSeries::monomial(var, 1, 1, order));
}

void require_order(int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be non-negative");
}

double dimensionless_scale(const OscillatorParams& params, const EnergySpec& energy)
{
    return energy.excess_energy() / omega0(params) * std::sqrt(1.0 + 0.5 * energy.epsilon());
}

}  // namespace

ActionResult action_nonrel(const OscillatorParams& params, double energy)
{
    if (!(std::isfinite(energy) && energy > 0.0))
        throw std::domain_error("energy must be positive");
    return {energy / omega0(params), Method::nonrel_closed, 0, 0.0, {}};
}

FormalSeries pdx_bracket_series(int order)
{
    require_order(order);
    // x sqrt(1 - (x2/x)^2) sqrt(1 - (x/x4)^2) with w = (x/x2)^2: the x^-1 term
    // is x2^2 times the w^-1 coefficient, collected in powers of r = (x2/x4)^2.
    const FormalSeries descending = sqrt_one_minus("u", order + 1);
    const FormalSeries ascending = sqrt_one_minus("v", order);
    const FormalSeries residue = laurent_coefficient(descending, ascending, 1, "r");
    // J = (1/2pi)(2pi i)(i sqrt(mk) sqrt(1+eps/2)) x2^2 residue; x2^2 = 2E~/k.
    return scale(residue, -2);
}

FormalSeries pdx_bracket_closed_form(int order)
{
    require_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int b = 0; b <= order; ++b)
        c[b] = 2 * binomial_half(b + 1) * binomial_half(b);
    return FormalSeries("r", std::move(c));
}

FormalSeries ratio_series(int order)
{
    require_order(order);
    const auto eps = FormalSeries::monomial("eps", 1, 1, order);
    const auto two_plus_eps = FormalSeries::constant("eps", 2, order) + eps;
    return eps * reciprocal(two_plus_eps);
}

FormalSeries pdx_bracket_in_epsilon(int order)
{
    return compose(pdx_bracket_series(order), ratio_series(order));
}

std::vector<FormalSeries> momentum_shape_coefficients(int order)
{
    require_order(order);
    // f = (1 + q(s)/(2+eps))^(-1/2) with q = sqrt(1+s) - 1, q(0) = 0, so
    // f_j = sum_{n<=j} C(-1/2, n) [s^j] q^n (2+eps)^-n.
    const FormalSeries one_s = FormalSeries::constant("s", 1, order);
    const FormalSeries q = sqrt(one_s + FormalSeries::monomial("s", 1, 1, order)) - one_s;
    const FormalSeries inv = reciprocal(FormalSeries::constant("eps", 2, order) +
                                        FormalSeries::monomial("eps", 1, 1, order));

    std::vector<FormalSeries> q_pow{one_s};
    std::vector<FormalSeries> inv_pow{FormalSeries::constant("eps", 1, order)};
    for (int n = 1; n <= order; ++n) {
        q_pow.push_back(q_pow.back() * q);
        inv_pow.push_back(inv_pow.back() * inv);
    }

    std::vector<FormalSeries> f;
    f.reserve(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) {
        FormalSeries fj = FormalSeries::zero("eps", order);
        for (int n = 0; n <= j; ++n) {
            const Rational& qc = q_pow[n][j];
            if (qc != 0)
                fj = fj + scale(inv_pow[n], binomial(Rational(-1, 2), n) * qc);
        }
        f.push_back(std::move(fj));
    }
    return f;
}

FormalSeries xdp_bracket_series(int order)
{
    require_order(order);
    // x(p) = -i sqrt(2E~/k) (p/p2) sqrt(1 - (p2/p)^2) f(s); with s = s2 (p/p2)^2
    // and s2 = (p2/mc)^2 = 2 eps + eps^2 the p^-1 coefficient collects
    // d_{j+1} f_j(eps) s2^j.
    const FormalSeries descending = sqrt_one_minus("u", order + 1);
    const std::vector<FormalSeries> f = momentum_shape_coefficients(order);
    const FormalSeries s2 = FormalSeries::monomial("eps", 2, 1, order) +
                            FormalSeries::monomial("eps", 1, 2, order);

    FormalSeries residue = FormalSeries::zero("eps", order);
    FormalSeries s2_pow = FormalSeries::constant("eps", 1, order);
    for (int j = 0; j <= order; ++j) {
        residue = residue + scale(f[j] * s2_pow, descending[j + 1]);
        s2_pow = s2_pow * s2;
    }
    // Overall sign fixed by the non-relativistic limit J -> E~/omega0.
    return scale(residue, -2);
}

const BracketSeries& bracket_series(int order)
{
    require_order(order);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const BracketSeries>> cache;

    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        auto entry = std::make_unique<const BracketSeries>(BracketSeries{
            pdx_bracket_series(order), xdp_bracket_series(order), pdx_bracket_in_epsilon(order)});
        it = cache.emplace(order, std::move(entry)).first;
    }
    return *it->second;
}

ActionResult action_pdx(const OscillatorParams& params, const EnergySpec& energy, int order)
{
    const double eps = energy.epsilon();
    const auto b = eval(bracket_series(order).pdx_bracket, eps / (2.0 + eps));
    const double s = dimensionless_scale(params, energy);
    return {s * b.value, Method::pdx_series, order, s * b.last_term, regime_flags(eps)};
}

ActionResult action_xdp(const OscillatorParams& params, const EnergySpec& energy, int order)
{
    const double eps = energy.epsilon();
    const auto b = eval(bracket_series(order).xdp_bracket, eps);
    const double s = dimensionless_scale(params, energy);
    Flags flags = regime_flags(eps);
    if (eps >= xdp_convergence_guard)
        flags.set(Flag::diverging);
    return {s * b.value, Method::xdp_series, order, s * b.last_term, flags};
}

}  // namespace relosc
