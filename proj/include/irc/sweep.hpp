#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace irc {

// One alpha-grid point of a GDoF curve at fixed (beta, gamma).
struct SweepRow {
    double alpha = 0.0;
    double d_formula = 0.0;
    double d_ic = 0.0;
    double d_converse_numeric = 0.0;  // final-rung slope of the tightest bound
    double d_fdf_numeric = 0.0;       // final-rung slope of the best FDF rate
    int argmin = 1;
};

struct SweepOptions {
    double beta = 1.1;
    double gamma = 0.2;
    double alpha_min = 0.2;
    double alpha_max = 2.5;
    int steps = 47;
    std::vector<double> snr_ladder{1e10, 1e20, 1e30};
    int k_max = 3;
    int resolution = 6;
};

inline constexpr std::string_view kSweepCsvHeader =
    "alpha,d_formula,d_ic,d_converse_numeric,d_fdf_numeric,argmin";

// Number of grid points for a 0.05 spacing over [alpha_min, alpha_max].
int default_sweep_steps(double alpha_min, double alpha_max);

// "10,20,30" -> {1e10, 1e20, 1e30}. Throws DomainError on malformed input.
std::vector<double> parse_snr_ladder(std::string_view powers_of_ten);

std::vector<double> alpha_grid(double alpha_min, double alpha_max, int steps);

/// Evaluates every row. Preconditions are checked up front: alpha_min >= gamma,
/// alpha_max >= alpha_min, steps >= 2. Rows are computed in parallel and
/// returned in grid order.
std::vector<SweepRow> compute_sweep(const SweepOptions& opts);

// Header plus one LF-terminated line per row, six decimals per real.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::string format_sweep_row(const SweepRow& row);

}  // namespace irc
