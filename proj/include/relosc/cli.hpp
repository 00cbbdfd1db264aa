#pragma once

#include "relosc/oracle.hpp"
#include "relosc/tags.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace relosc::cli {

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;

/// One row of output: everything one method says about a single epsilon.
/// error_estimate is relative (dimensionless). When the method fails the
/// numeric fields are NaN and flags contain convergence-failure; writers emit
/// those as null (JSON) or empty (CSV).
struct OutputRecord {
    double epsilon;
    Method method;
    double action;
    double omega;
    double period;
    double eta;
    int order;
    double error_estimate;
    Flags flags;
};

struct ComputeOptions {
    OscillatorParams params;
    int order = default_series_order;
    QuadratureConfig quadrature;
    OdeConfig ode;
};

OutputRecord compute_record(double epsilon, Method method, const ComputeOptions& opts);

inline constexpr const char* csv_header = "epsilon,method,J,omega,tau,eta,order,error_estimate,flags";

void write_csv(std::ostream& out, std::span<const OutputRecord> records);
void write_json(std::ostream& out, std::span<const OutputRecord> records);

/// Locale-independent, 17 significant digits (round-trips exactly).
std::string format_double(double v);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relosc::cli
