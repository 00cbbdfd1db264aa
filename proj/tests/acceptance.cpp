// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "relosc/action.hpp"
#include "relosc/fps.hpp"
#include "relosc/frequency.hpp"
#include "relosc/oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace relosc;

namespace {

constexpr double pi = std::numbers::pi;

struct Verdict {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Verdict()>& check)
{
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
        v = check();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass)
        ++failures;
    std::printf("[%s] %-4s %s (%.0f ms)%s%s\n", v.pass ? "PASS" : "FAIL", id, title, ms,
                v.detail.empty() ? "" : " -- ", v.detail.c_str());
}

std::string join(const FormalSeries& s)
{
    std::string out = "[";
    for (int i = 0; i <= s.order(); ++i)
        out += (i ? ", " : "") + to_string(s[i]);
    return out + "]";
}

bool prefix_equals(const FormalSeries& s, const std::vector<Rational>& expected)
{
    if (s.order() + 1 < static_cast<int>(expected.size()))
        return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (s[static_cast<int>(i)] != expected[i])
            return false;
    return true;
}

// Exact 2F1(a, b; c; z) coefficients through z^n.
FormalSeries hypergeometric_coefficients(Rational a, Rational b, Rational c, int n)
{
    std::vector<Rational> t{1};
    for (int k = 0; k < n; ++k)
        t.push_back(t.back() * (a + k) * (b + k) / ((c + k) * (k + 1)));
    return FormalSeries("z", t);
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

FormalSeries random_series(std::mt19937& rng, int order, bool square_constant)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    std::vector<Rational> c;
    for (int i = 0; i <= order; ++i)
        c.emplace_back(num(rng), den(rng));
    const int a = den(rng), b = den(rng);
    c[0] = square_constant ? Rational(a * a, b * b) : Rational(a, b);
    return FormalSeries("x", std::move(c));
}

const std::vector<double> grid{0.01, 0.05, 0.1, 0.2, 0.3, 0.4};

}  // namespace

int main()
{
    const OscillatorParams unit;
    const OscillatorParams scaled(1.3, 0.7, 2.0);

    criterion("1a", "p dx bracket = [1, -1/8, -1/64, ...]", [] {
        const auto s = pdx_bracket_series(2);
        return Verdict{prefix_equals(s, {1, Rational(-1, 8), Rational(-1, 64)}), join(s)};
    });

    criterion("1b", "-x dp bracket = [1, -1/16, 7/256, 1/128]", [] {
        const auto s = xdp_bracket_series(3);
        return Verdict{prefix_equals(s, {1, Rational(-1, 16), Rational(7, 256), Rational(1, 128)}),
                       "computed " + join(s)};
    });

    criterion("1c", "eta series = [1, 3/8]", [] {
        const auto a = eta_series(1, SeriesForm::pdx);
        const auto b = eta_series(1, SeriesForm::xdp);
        return Verdict{prefix_equals(a, {1, Rational(3, 8)}) && a == b, join(a)};
    });

    criterion("1d", "2F1 brackets through kappa^4: 1 - k2/4 - 3k4/64 and 1 + k2/4 + 9k4/64", [] {
        const auto minus = hypergeometric_coefficients(Rational(-1, 2), Rational(1, 2), 1, 2);
        const auto plus = hypergeometric_coefficients(Rational(1, 2), Rational(1, 2), 1, 2);
        bool ok = prefix_equals(minus, {1, Rational(-1, 4), Rational(-3, 64)}) &&
                  prefix_equals(plus, {1, Rational(1, 4), Rational(9, 64)});
        // the numeric evaluator follows the same series
        for (double z : {1e-3, 1e-2}) {
            ok = ok && std::abs(hypergeometric_2f1(-0.5, 0.5, 1, z) - eval(minus, z).value) <
                           z * z * z;
            ok = ok && std::abs(hypergeometric_2f1(0.5, 0.5, 1, z) - eval(plus, z).value) <
                           z * z * z;
        }
        return Verdict{ok, join(minus) + " " + join(plus)};
    });

    criterion("2", "compose(p dx bracket, eps/(2+eps)) == -x dp bracket through order 24", [] {
        const auto lhs = compose(pdx_bracket_series(24), ratio_series(24));
        const auto rhs = xdp_bracket_series(24);
        return Verdict{lhs == rhs && lhs.order() == 24, ""};
    });

    criterion("3", "c_b = 2 C(1/2,b+1) C(1/2,b) equals residue extraction for b <= 32", [] {
        return Verdict{pdx_bracket_series(32) == pdx_bracket_closed_form(32), ""};
    });

    criterion("4a", "J, omega: p dx series (order 32) vs quadrature <= 1e-10", [&] {
        double worst = 0.0;
        for (const auto& p : {unit, scaled})
            for (double eps : grid) {
                const auto e = energy_from_epsilon(p, eps);
                worst = std::max(worst, rel(action_pdx(p, e, 32).value, action_quadrature(p, e).value));
                const double omega_quad = 2 * pi / period_direct(p, e);
                worst = std::max(worst, rel(frequency_from_action(p, e, 32).omega, omega_quad));
            }
        return Verdict{worst <= 1e-10, "max rel diff " + sci(worst)};
    });

    criterion("4b", "omega: series vs 2pi/period_direct vs 2pi/period_closed_form <= 1e-8", [&] {
        double worst = 0.0;
        for (const auto& p : {unit, scaled})
            for (double eps : grid) {
                const auto e = energy_from_epsilon(p, eps);
                const double a = frequency_from_action(p, e, 32).omega;
                const double b = 2 * pi / period_direct(p, e);
                const double c = 2 * pi / period_closed_form(p, e);
                worst = std::max({worst, rel(a, b), rel(a, c), rel(b, c)});
            }
        return Verdict{worst <= 1e-8, "max rel diff " + sci(worst)};
    });

    criterion("4c", "simulated period vs closed form <= 1e-6", [&] {
        double worst = 0.0;
        for (const auto& p : {unit, scaled})
            for (double eps : grid) {
                const auto e = energy_from_epsilon(p, eps);
                worst = std::max(worst, rel(simulate_period(p, e).period, period_closed_form(p, e)));
            }
        return Verdict{worst <= 1e-6, "max rel diff " + sci(worst)};
    });

    criterion("5a", "eps = 0.01: |omega0/omega_R - (1 + 3 eps/8)| <= 5e-5", [&] {
        const double eps = 0.01;
        const auto f = frequency_from_action(unit, energy_from_epsilon(unit, eps));
        const double dev = std::abs(omega0(unit) / f.omega - (1 + 3 * eps / 8));
        return Verdict{dev <= 5e-5, "deviation " + sci(dev)};
    });

    criterion("5b", "eps = 1e-6: tau within 1e-6 of 2 pi sqrt(m/k)", [&] {
        double worst = 0.0;
        for (const auto& p : {unit, scaled}) {
            const auto e = energy_from_epsilon(p, 1e-6);
            const double tau0 = 2 * pi * std::sqrt(p.mass() / p.spring_constant());
            for (double tau : {frequency_from_action(p, e).period, period_direct(p, e),
                               period_closed_form(p, e), simulate_period(p, e).period})
                worst = std::max(worst, rel(tau, tau0));
        }
        return Verdict{worst <= 1e-6, "max rel diff " + sci(worst)};
    });

    criterion("6", "non-relativistic J = E/omega0 (closed form and quadrature) <= 1e-12", [] {
        double worst = 0.0;
        for (const auto& [p, energy] : {std::pair{OscillatorParams(1, 1, 1), 1.0},
                                        std::pair{OscillatorParams(2, 5, 1), 0.37},
                                        std::pair{OscillatorParams(0.1, 30, 3), 12.0}}) {
            const double expected = energy / omega0(p);
            worst = std::max(worst, rel(action_nonrel(p, energy).value, expected));
            worst = std::max(worst, rel(action_quadrature_nonrel(p, energy).value, expected));
        }
        return Verdict{worst <= 1e-12, "max rel diff " + sci(worst)};
    });

    criterion("7a", "fps ring, sqrt, reciprocal and chain-rule identities hold exactly", [] {
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 1 + trial % 9;
            const auto a = random_series(rng, n, false);
            const auto b = random_series(rng, n, false);
            const auto c = random_series(rng, n, false);
            if (!(a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) &&
                  (a + b) + c == a + (b + c) && a * (b + c) == a * b + a * c))
                return Verdict{false, "ring axiom"};
            const auto sq = random_series(rng, n, true);
            if (!(sqrt(sq) * sqrt(sq) == sq))
                return Verdict{false, "sqrt round-trip"};
            if (!(a * reciprocal(a) == FormalSeries::constant("x", 1, n)))
                return Verdict{false, "reciprocal round-trip"};
            std::vector<Rational> gc(c.coefficients().begin(), c.coefficients().end());
            gc[0] = 0;
            const FormalSeries g("x", gc);
            const auto f = b.renamed("u");
            if (!(differentiate(compose(f, g)) == compose(differentiate(f), g) * differentiate(g)))
                return Verdict{false, "chain rule"};
        }
        return Verdict{true, "40 random trials"};
    });

    criterion("7b", "oracle: omega_R < omega0 and tau strictly increasing on the eps grid", [&] {
        for (const auto& p : {unit, scaled}) {
            double prev = 0.0;
            for (double eps : grid) {
                const double tau = period_direct(p, energy_from_epsilon(p, eps));
                if (!(tau > prev) || !(2 * pi / tau < omega0(p)))
                    return Verdict{false, "at eps " + std::to_string(eps)};
                prev = tau;
            }
        }
        return Verdict{true, ""};
    });

    criterion("7c", "ODE energy drift <= 1e-9", [&] {
        double worst = 0.0;
        for (const auto& p : {unit, scaled})
            for (double eps : grid)
                worst = std::max(worst, simulate_period(p, energy_from_epsilon(p, eps)).max_energy_drift);
        return Verdict{worst <= 1e-9, "max drift " + sci(worst)};
    });

    criterion("7d", "omega * tau = 2 pi to 1e-14", [&] {
        double worst = 0.0;
        for (const auto& p : {unit, scaled})
            for (double eps : grid)
                for (auto form : {SeriesForm::pdx, SeriesForm::xdp}) {
                    const auto f = frequency_from_action(p, energy_from_epsilon(p, eps), 32, form);
                    worst = std::max(worst, std::abs(f.omega * f.period / (2 * pi) - 1.0));
                }
        return Verdict{worst <= 1e-14, "max deviation " + sci(worst)};
    });

    criterion("7e", "J omega0 / E~ invariant under (m, k, c) rescaling to 1e-14", [&] {
        double worst = 0.0;
        for (double eps : grid) {
            const auto e0 = energy_from_epsilon(unit, eps);
            const double ref = action_pdx(unit, e0).value * omega0(unit) / e0.excess_energy();
            for (const auto& p : {OscillatorParams(2, 2, 1), OscillatorParams(0.3, 5, 7),
                                  OscillatorParams(10, 0.1, 0.05), scaled}) {
                const auto e = energy_from_epsilon(p, eps);
                worst = std::max(worst, rel(action_pdx(p, e).value * omega0(p) / e.excess_energy(), ref));
            }
        }
        return Verdict{worst <= 1e-14, "max rel diff " + sci(worst)};
    });

    std::printf("%s: %d criterion line(s) failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
