#include "irc/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "irc/bounds.hpp"
#include "irc/channel.hpp"
#include "irc/fdf.hpp"
#include "irc/gdof.hpp"
#include "irc/slope.hpp"

namespace irc {

namespace {

SweepRow evaluate_row(const SweepOptions& opts, double alpha)
{
    const StrengthExponents e{alpha, opts.beta, opts.gamma};
    const GdofBreakdown closed = gdof_irc(e);

    // Only the final slope is reported, so the convergence tolerance is moot.
    constexpr double tol = 0.1;
    const SlopeEstimate converse = estimate_slope(
        [](const LinearChannel& ch) { return bound_report(ch).tightest; }, e, opts.snr_ladder,
        tol);
    const SlopeEstimate fdf = estimate_slope(
        [&opts](const LinearChannel& ch) {
            return best_sum_rate(ch, opts.k_max, opts.resolution).rates.sum_rate;
        },
        e, opts.snr_ladder, tol);

    SweepRow row;
    row.alpha = alpha;
    row.d_formula = closed.value;
    row.d_ic = gdof_ic(alpha);
    row.d_converse_numeric = converse.final_slope;
    row.d_fdf_numeric = fdf.final_slope;
    row.argmin = closed.argmin_index;
    return row;
}

void append_fixed6(std::string& out, double x)
{
    char buf[64];
    // Avoid printing "-0.000000".
    const double v = std::abs(x) < 5e-7 ? 0.0 : x;
    const int n = std::snprintf(buf, sizeof buf, "%.6f", v);
    out.append(buf, static_cast<std::size_t>(n));
}

}  // namespace

int default_sweep_steps(double alpha_min, double alpha_max)
{
    return static_cast<int>(std::lround((alpha_max - alpha_min) / 0.05)) + 1;
}

std::vector<double> parse_snr_ladder(std::string_view text)
{
    std::vector<double> ladder;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        double exponent = 0.0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), exponent);
        if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
            throw DomainError("snr ladder: expected comma-separated powers of ten, got '" +
                              std::string(text) + "'");
        }
        ladder.push_back(std::pow(10.0, exponent));
        pos = comma + 1;
    }
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (!(ladder[i] > 1.0) || !std::isfinite(ladder[i]) ||
            (i > 0 && !(ladder[i] > ladder[i - 1]))) {
            throw DomainError("snr ladder: powers must be positive and strictly increasing");
        }
    }
    return ladder;
}

std::vector<double> alpha_grid(double alpha_min, double alpha_max, int steps)
{
    std::vector<double> grid(static_cast<std::size_t>(steps));
    const double span = alpha_max - alpha_min;
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<std::size_t>(i)] = alpha_min + span * i / (steps - 1);
    }
    grid.back() = alpha_max;
    return grid;
}

std::vector<SweepRow> compute_sweep(const SweepOptions& opts)
{
    if (!std::isfinite(opts.alpha_min) || !std::isfinite(opts.alpha_max) ||
        !std::isfinite(opts.beta) || !std::isfinite(opts.gamma) || opts.beta < 0.0 ||
        opts.gamma < 0.0) {
        throw DomainError("sweep: exponents must be finite and non-negative");
    }
    if (opts.alpha_min < opts.gamma) {
        throw RegimeError("regime gamma>alpha not characterized (alpha_min < gamma)");
    }
    if (opts.alpha_max < opts.alpha_min) {
        throw DomainError("sweep: alpha_max must be >= alpha_min");
    }
    if (opts.steps < 2) {
        throw DomainError("sweep: steps must be >= 2");
    }
    if (opts.k_max < 1 || opts.resolution < 2) {
        throw DomainError("sweep: k_max must be >= 1 and resolution >= 2");
    }
    if (opts.snr_ladder.empty()) {
        throw DomainError("sweep: snr ladder is empty");
    }

    const std::vector<double> grid = alpha_grid(opts.alpha_min, opts.alpha_max, opts.steps);
    std::vector<SweepRow> rows(grid.size());

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, grid.size());
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < grid.size(); i += workers) {
                        rows[i] = evaluate_row(opts, grid[i]);
                    }
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return rows;
}

std::string format_sweep_row(const SweepRow& row)
{
    std::string line;
    line.reserve(80);
    append_fixed6(line, row.alpha);
    line += ',';
    append_fixed6(line, row.d_formula);
    line += ',';
    append_fixed6(line, row.d_ic);
    line += ',';
    append_fixed6(line, row.d_converse_numeric);
    line += ',';
    append_fixed6(line, row.d_fdf_numeric);
    line += ',';
    line += std::to_string(row.argmin);
    return line;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows)
{
    os << kSweepCsvHeader << '\n';
    for (const auto& row : rows) {
        os << format_sweep_row(row) << '\n';
    }
}

}  // namespace irc
