#include "relosc/cli.hpp"

#include "relosc/frequency.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>

namespace relosc::cli {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double relative(double error, double value)
{
    return value != 0.0 ? std::abs(error / value) : std::abs(error);
}

OutputRecord failed_record(double epsilon, Method method, int order, Flags flags)
{
    flags.set(Flag::convergence_failure);
    return {epsilon, method, nan, nan, nan, nan, order, nan, flags};
}

OutputRecord from_results(double epsilon, const ActionResult& action,
                          const FrequencyResult& freq, double error)
{
    Flags flags = action.flags;
    flags.merge(freq.flags);
    return {epsilon, action.method, action.value, freq.omega, freq.period, freq.eta,
            action.order, error, flags};
}

std::string flags_text(Flags flags)
{
    std::string s;
    for (auto name : flags.names()) {
        if (!s.empty())
            s += ';';
        s += name;
    }
    return s;
}

nlohmann::json number_or_null(double v)
{
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

nlohmann::json to_json(const OutputRecord& r)
{
    nlohmann::json flags = nlohmann::json::array();
    for (auto name : r.flags.names())
        flags.push_back(std::string(name));
    return {{"epsilon", number_or_null(r.epsilon)},
            {"method", std::string(to_string(r.method))},
            {"J", number_or_null(r.action)},
            {"omega", number_or_null(r.omega)},
            {"tau", number_or_null(r.period)},
            {"eta", number_or_null(r.eta)},
            {"order", r.order},
            {"error_estimate", number_or_null(r.error_estimate)},
            {"flags", flags}};
}

std::string csv_number(double v)
{
    return std::isfinite(v) ? format_double(v) : std::string();
}

double relative_difference(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

// Options shared by the record-producing subcommands.
struct PhysicsOptions {
    double m = 1.0;
    double k = 1.0;
    double c = 1.0;
    int order = default_series_order;
    std::string format = "csv";

    void attach(CLI::App& cmd)
    {
        cmd.add_option("--m", m, "Mass")->capture_default_str();
        cmd.add_option("--k", k, "Spring constant")->capture_default_str();
        cmd.add_option("--c", c, "Light speed")->capture_default_str();
        cmd.add_option("--order", order, "Series truncation order")->capture_default_str();
        cmd.add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    }

    ComputeOptions compute_options() const
    {
        if (order < 1 || order > 64)
            throw UsageError("order must be between 1 and 64");
        ComputeOptions opts;
        try {
            opts.params = OscillatorParams(m, k, c);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
        opts.order = order;
        return opts;
    }
};

void require_positive_epsilon(double eps)
{
    if (!(std::isfinite(eps) && eps > 0.0))
        throw UsageError("epsilon must be positive");
}

Method method_from(const std::string& text)
{
    if (auto m = parse_method(text))
        return *m;
    throw UsageError("unknown method '" + text + "'");
}

std::vector<std::string> method_names()
{
    std::vector<std::string> names;
    for (Method m : {Method::nonrel_closed, Method::pdx_series, Method::xdp_series,
                     Method::quadrature, Method::closed_form, Method::ode})
        names.emplace_back(to_string(m));
    return names;
}

void write_records(std::ostream& out, const std::string& format,
                   std::span<const OutputRecord> records)
{
    if (format == "json")
        write_json(out, records);
    else
        write_csv(out, records);
}

int cmd_coeffs(std::ostream& out, const std::string& form, int order, const std::string& format)
{
    if (order < 0 || order > 64)
        throw UsageError("order must be between 0 and 64");
    std::optional<FormalSeries> series;
    if (form == "pdx")
        series = bracket_series(order).pdx_bracket;
    else if (form == "xdp")
        series = bracket_series(order).xdp_bracket;
    else {
        if (order < 1)
            throw UsageError("eta coefficients need order >= 1");
        series = eta_series(order, SeriesForm::pdx);
    }

    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : series->coefficients())
            arr.push_back(to_string(c));
        out << arr.dump() << '\n';
    } else {
        out << "index,coefficient\n";
        for (int i = 0; i <= series->order(); ++i)
            out << i << ',' << to_string((*series)[i]) << '\n';
    }
    return exit_ok;
}

int cmd_compare(std::ostream& out, double eps, const ComputeOptions& opts, double tol,
                const std::string& format)
{
    require_positive_epsilon(eps);
    if (!(tol > 0.0))
        throw UsageError("tol must be positive");

    std::vector<OutputRecord> records;
    for (Method m : {Method::pdx_series, Method::xdp_series, Method::quadrature,
                     Method::closed_form, Method::ode})
        records.push_back(compute_record(eps, m, opts));

    struct Pair {
        std::size_t a, b;
        double d_action, d_omega;
        bool gated;
    };
    std::vector<Pair> pairs;
    bool pass = true;
    double max_gated = 0.0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            const auto& a = records[i];
            const auto& b = records[j];
            const bool gated = !a.flags.has(Flag::diverging) && !b.flags.has(Flag::diverging) &&
                               !a.flags.has(Flag::unvalidated_regime) &&
                               !b.flags.has(Flag::unvalidated_regime);
            Pair p{i, j, relative_difference(a.action, b.action),
                   relative_difference(a.omega, b.omega), gated};
            if (gated) {
                const double worst = std::max(p.d_action, p.d_omega);
                if (!(worst <= tol))  // NaN from a failed method also fails
                    pass = false;
                max_gated = std::max(max_gated, std::isfinite(worst) ? worst : max_gated);
            }
            pairs.push_back(p);
        }
    }

    if (format == "json") {
        nlohmann::json doc;
        doc["records"] = nlohmann::json::array();
        for (const auto& r : records)
            doc["records"].push_back(to_json(r));
        doc["differences"] = nlohmann::json::array();
        for (const auto& p : pairs)
            doc["differences"].push_back({{"a", std::string(to_string(records[p.a].method))},
                                          {"b", std::string(to_string(records[p.b].method))},
                                          {"J", number_or_null(p.d_action)},
                                          {"omega", number_or_null(p.d_omega)},
                                          {"gated", p.gated}});
        doc["tolerance"] = tol;
        doc["max_gated_difference"] = max_gated;
        doc["pass"] = pass;
        out << doc.dump(2) << '\n';
    } else {
        write_csv(out, records);
        out << '\n' << "method_a,method_b,rel_diff_J,rel_diff_omega,gated\n";
        for (const auto& p : pairs)
            out << to_string(records[p.a].method) << ',' << to_string(records[p.b].method) << ','
                << csv_number(p.d_action) << ',' << csv_number(p.d_omega) << ','
                << (p.gated ? "true" : "false") << '\n';
    }
    return pass ? exit_ok : exit_numerical;
}

std::vector<double> epsilon_grid(double lo, double hi, int steps, bool log_spaced)
{
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / (steps - 1);
        grid[i] = log_spaced ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                             : lo + t * (hi - lo);
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

}  // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

OutputRecord compute_record(double epsilon, Method method, const ComputeOptions& opts)
{
    const OscillatorParams& params = opts.params;
    const EnergySpec energy = energy_from_epsilon(params, epsilon);
    try {
        switch (method) {
        case Method::nonrel_closed: {
            const auto j = action_nonrel(params, energy.excess_energy());
            return from_results(epsilon, j, frequency_nonrel(params), 0.0);
        }
        case Method::pdx_series:
        case Method::xdp_series: {
            const bool pdx = method == Method::pdx_series;
            const auto j = pdx ? action_pdx(params, energy, opts.order)
                               : action_xdp(params, energy, opts.order);
            const auto f = frequency_from_action(params, energy, opts.order,
                                                 pdx ? SeriesForm::pdx : SeriesForm::xdp);
            const double err = std::max(relative(j.error_estimate, j.value),
                                        relative(f.error_estimate, f.eta));
            return from_results(epsilon, j, f, err);
        }
        case Method::quadrature: {
            const auto j = action_quadrature(params, energy, opts.quadrature);
            const double tau = period_direct(params, energy, opts.quadrature);
            const auto f = make_frequency_result(params, 2.0 * std::numbers::pi / tau,
                                                 Method::quadrature, 0, 0.0, j.flags);
            return from_results(epsilon, j, f, relative(j.error_estimate, j.value));
        }
        case Method::closed_form: {
            const auto j = action_closed_form(params, energy);
            const double tau = period_closed_form(params, energy);
            const auto f = make_frequency_result(params, 2.0 * std::numbers::pi / tau,
                                                 Method::closed_form, 0, 0.0, j.flags);
            return from_results(epsilon, j, f, relative(j.error_estimate, j.value));
        }
        case Method::ode: {
            const auto sim = simulate_period(params, energy, opts.ode);
            const ActionResult j{sim.action, Method::ode, 0, 0.0, regime_flags(epsilon)};
            const auto f = make_frequency_result(params, 2.0 * std::numbers::pi / sim.period,
                                                 Method::ode, 0, 0.0, j.flags);
            return from_results(epsilon, j, f, relative(sim.period_error, sim.period));
        }
        }
    } catch (const ConvergenceError&) {
    } catch (const IntegratorError&) {
    }
    const bool series = method == Method::pdx_series || method == Method::xdp_series;
    return failed_record(epsilon, method, series ? opts.order : 0, regime_flags(epsilon));
}

void write_csv(std::ostream& out, std::span<const OutputRecord> records)
{
    out << csv_header << '\n';
    for (const auto& r : records)
        out << csv_number(r.epsilon) << ',' << to_string(r.method) << ',' << csv_number(r.action)
            << ',' << csv_number(r.omega) << ',' << csv_number(r.period) << ','
            << csv_number(r.eta) << ',' << r.order << ',' << csv_number(r.error_estimate) << ','
            << flags_text(r.flags) << '\n';
}

void write_json(std::ostream& out, std::span<const OutputRecord> records)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Action variable and frequency of the relativistic harmonic oscillator",
                 "relosc"};
    app.require_subcommand(1);

    std::string form = "pdx";
    int coeff_order = 2;
    std::string coeff_format = "json";
    auto* coeffs = app.add_subcommand("coeffs", "Exact bracket or eta series coefficients");
    coeffs->add_option("--form", form, "pdx | xdp | eta")
        ->check(CLI::IsMember({"pdx", "xdp", "eta"}))
        ->capture_default_str();
    coeffs->add_option("--order", coeff_order, "Highest coefficient index")->capture_default_str();
    coeffs->add_option("--format", coeff_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // action / frequency / period: a single record at one epsilon
    struct PointCommand {
        PhysicsOptions physics;
        double epsilon = 0.0;
        std::string method = "pdx-series";
        CLI::App* cmd = nullptr;
    };
    std::array<PointCommand, 3> point;
    const std::array<std::pair<const char*, const char*>, 3> point_names{{
        {"action", "Action variable J at one energy"},
        {"frequency", "Angular frequency at one energy"},
        {"period", "Oscillation period at one energy"},
    }};
    for (std::size_t i = 0; i < point.size(); ++i) {
        auto& pc = point[i];
        pc.cmd = app.add_subcommand(point_names[i].first, point_names[i].second);
        pc.cmd->add_option("--epsilon", pc.epsilon, "Excess energy in units of m c^2")
            ->required();
        pc.cmd->add_option("--method", pc.method, "Computation method")
            ->check(CLI::IsMember(method_names()))
            ->capture_default_str();
        pc.physics.attach(*pc.cmd);
    }

    PhysicsOptions sweep_physics;
    double eps_min = 0.0, eps_max = 0.0;
    int steps = 0;
    bool log_grid = false;
    std::string sweep_method = "pdx-series";
    std::string output_path;
    auto* sweep = app.add_subcommand("sweep", "Records over an epsilon grid");
    sweep->add_option("--eps-min", eps_min, "Smallest epsilon")->required();
    sweep->add_option("--eps-max", eps_max, "Largest epsilon")->required();
    sweep->add_option("--steps", steps, "Grid points (>= 2)")->required();
    sweep->add_flag("--log", log_grid, "Logarithmic grid");
    sweep->add_option("--method", sweep_method, "Computation method")
        ->check(CLI::IsMember(method_names()))
        ->capture_default_str();
    sweep->add_option("--output", output_path, "Write to file instead of stdout");
    sweep_physics.attach(*sweep);

    PhysicsOptions compare_physics;
    double compare_eps = 0.0;
    double tol = 1e-8;
    auto* compare = app.add_subcommand("compare", "Cross-check all methods at one energy");
    compare->add_option("--epsilon", compare_eps, "Excess energy in units of m c^2")->required();
    compare->add_option("--tol", tol, "Relative agreement tolerance")->capture_default_str();
    compare_physics.attach(*compare);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (coeffs->parsed())
            return cmd_coeffs(out, form, coeff_order, coeff_format);

        for (auto& pc : point) {
            if (!pc.cmd->parsed())
                continue;
            require_positive_epsilon(pc.epsilon);
            const OutputRecord rec =
                compute_record(pc.epsilon, method_from(pc.method), pc.physics.compute_options());
            write_records(out, pc.physics.format, std::span(&rec, 1));
            return rec.flags.has(Flag::convergence_failure) ? exit_numerical : exit_ok;
        }

        if (sweep->parsed()) {
            if (!(std::isfinite(eps_min) && eps_min > 0.0 && std::isfinite(eps_max) &&
                  eps_max > eps_min))
                throw UsageError("need 0 < eps-min < eps-max");
            if (steps < 2)
                throw UsageError("steps must be >= 2");
            const ComputeOptions opts = sweep_physics.compute_options();
            const Method method = method_from(sweep_method);
            std::vector<OutputRecord> records;
            for (double eps : epsilon_grid(eps_min, eps_max, steps, log_grid))
                records.push_back(compute_record(eps, method, opts));
            if (output_path.empty()) {
                write_records(out, sweep_physics.format, records);
            } else {
                std::ofstream file(output_path, std::ios::binary);
                if (!file)
                    throw UsageError("cannot open output file '" + output_path + "'");
                write_records(file, sweep_physics.format, records);
            }
            return exit_ok;
        }

        if (compare->parsed())
            return cmd_compare(out, compare_eps, compare_physics.compute_options(), tol,
                               compare_physics.format);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace relosc::cli
