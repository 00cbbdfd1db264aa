#include "relosc/tags.hpp"

#include <array>
#include <utility>

namespace relosc {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 6> method_names{{
    {Method::nonrel_closed, "nonrel-closed"},
    {Method::pdx_series, "pdx-series"},
    {Method::xdp_series, "xdp-series"},
    {Method::quadrature, "quadrature"},
    {Method::closed_form, "closed-form"},
    {Method::ode, "ode"},
}};

constexpr std::array<std::pair<Flag, std::string_view>, 3> flag_names{{
    {Flag::diverging, "diverging"},
    {Flag::unvalidated_regime, "unvalidated-regime"},
    {Flag::convergence_failure, "convergence-failure"},
}};

}  // namespace

std::string_view to_string(Method m)
{
    for (const auto& [method, name] : method_names)
        if (method == m)
            return name;
    return "unknown";
}

std::optional<Method> parse_method(std::string_view text)
{
    for (const auto& [method, name] : method_names)
        if (name == text)
            return method;
    return std::nullopt;
}

std::string_view to_string(Flag f)
{
    for (const auto& [flag, name] : flag_names)
        if (flag == f)
            return name;
    return "unknown";
}

std::vector<std::string_view> Flags::names() const
{
    std::vector<std::string_view> out;
    for (const auto& [flag, name] : flag_names)
        if (has(flag))
            out.push_back(name);
    return out;
}

Flags regime_flags(double epsilon)
{
    Flags f;
    if (epsilon > validated_epsilon_max)
        f.set(Flag::unvalidated_regime);
    return f;
}

}  // namespace relosc
