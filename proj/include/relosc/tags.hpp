#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relosc {

/// How a result was obtained.
enum class Method {
    nonrel_closed,  ///< non-relativistic J = E/omega0
    pdx_series,     ///< residue series of the p dx contour integral
    xdp_series,     ///< residue series of the -x dp contour integral
    quadrature,     ///< real-axis Gauss-Legendre quadrature
    closed_form,    ///< Gauss hypergeometric closed forms
    ode,            ///< direct integration of Hamilton's equations
};

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view text);

/// Warnings attached to a result. Closed set.
enum class Flag : std::uint8_t {
    diverging = 1u << 0,           ///< xdp series used beyond its convergence guard
    unvalidated_regime = 1u << 1,  ///< eps > 10
    convergence_failure = 1u << 2, ///< a numerical method failed; values are not meaningful
};

std::string_view to_string(Flag f);

class Flags {
public:
    Flags() = default;
    Flags(Flag f) : bits_(static_cast<std::uint8_t>(f)) {}

    bool has(Flag f) const { return bits_ & static_cast<std::uint8_t>(f); }
    bool empty() const { return bits_ == 0; }
    Flags& set(Flag f) { bits_ |= static_cast<std::uint8_t>(f); return *this; }
    Flags& merge(Flags other) { bits_ |= other.bits_; return *this; }
    std::vector<std::string_view> names() const;

    bool operator==(const Flags&) const = default;

private:
    std::uint8_t bits_ = 0;
};

/// Above this epsilon results are computed but flagged unvalidated_regime.
inline constexpr double validated_epsilon_max = 10.0;

Flags regime_flags(double epsilon);

}  // namespace relosc
