// irc-gdof: GDoF, bounds and FDF rates of the symmetric interference relay channel.
//
//   irc-gdof gdof --alpha 0.7 --beta 1.1 --gamma 0.2
//   irc-gdof sweep --beta 1.1 --gamma 0.2 --out weak.csv
//   irc-gdof bounds --h-d 1 --h-c 1 --h-r 0 --h-sr 0.7 --power 1
//   irc-gdof achievable --h-d 1 --h-c 0.5 --h-r 2 --h-sr 0.3 --power 1e6
//
// Exit codes: 0 success, 1 usage error, 2 domain / regime / I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "irc/bounds.hpp"
#include "irc/channel.hpp"
#include "irc/fdf.hpp"
#include "irc/gdof.hpp"
#include "irc/sweep.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kDomainError = 2;

std::string fixed6(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

struct ChannelFlags {
    double h_d = 1.0;
    double h_c = 1.0;
    double h_r = 0.0;
    double h_sr = 0.0;
    double power = 1.0;

    void attach(CLI::App& app)
    {
        app.add_option("--h-d,--hd", h_d, "direct gain")->capture_default_str();
        app.add_option("--h-c,--hc", h_c, "cross (interference) gain")->capture_default_str();
        app.add_option("--h-r,--hr", h_r, "relay-to-destination gain")->capture_default_str();
        app.add_option("--h-sr,--hsr", h_sr, "source-to-relay gain")->capture_default_str();
        app.add_option("--power,-P", power, "per-node power budget P")->capture_default_str();
    }

    irc::LinearChannel channel() const
    {
        irc::LinearChannel ch{h_d, h_c, h_r, h_sr, power};
        irc::validate(ch);
        return ch;
    }
};

int run_gdof(double alpha, double beta, double gamma)
{
    const irc::GdofBreakdown d = irc::gdof_irc({alpha, beta, gamma});
    for (std::size_t i = 0; i < d.args.size(); ++i) {
        std::cout << "arg" << i + 1 << " = " << fixed6(d.args[i]) << '\n';
    }
    std::cout << "value = " << fixed6(d.value) << '\n';
    std::cout << "argmin = " << d.argmin_index << '\n';
    std::cout << "d_ic = " << fixed6(irc::gdof_ic(alpha)) << '\n';
    return 0;
}

int run_sweep(irc::SweepOptions opts, const std::optional<double>& alpha_min,
              const std::optional<int>& steps, const std::string& ladder, const std::string& out)
{
    opts.alpha_min = alpha_min.value_or(opts.gamma);
    opts.steps = steps.value_or(irc::default_sweep_steps(opts.alpha_min, opts.alpha_max));
    opts.snr_ladder = irc::parse_snr_ladder(ladder);
    const auto rows = irc::compute_sweep(opts);

    if (out.empty() || out == "-") {
        irc::write_sweep_csv(std::cout, rows);
        return 0;
    }
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "error: cannot open '" << out << "' for writing\n";
        return kDomainError;
    }
    irc::write_sweep_csv(file, rows);
    file.close();
    if (!file) {
        std::cerr << "error: failed writing '" << out << "'\n";
        return kDomainError;
    }
    std::cerr << "wrote " << rows.size() << " rows to " << out << '\n';
    return 0;
}

int run_bounds(const ChannelFlags& flags)
{
    const irc::BoundReport r = irc::bound_report(flags.channel());
    std::cout << "cutset_bc = " << fixed6(r.cutset_bc) << " bits\n";
    std::cout << "cutset_mac = " << fixed6(r.cutset_mac) << " bits\n";
    std::cout << "genie_1 = " << fixed6(r.genie_1) << " bits\n";
    if (r.genie_2) {
        std::cout << "genie_2 = " << fixed6(*r.genie_2) << " bits\n";
    } else {
        std::cout << "genie_2 = n/a (h_sr = 0)\n";
    }
    std::cout << "tightest = " << fixed6(r.tightest) << " bits (" << irc::to_string(r.tightest_name)
              << ")\n";
    return 0;
}

void print_allocation(const irc::PowerAllocation& a)
{
    std::cout << "alloc.p_private = " << a.p_private << '\n';
    std::cout << "alloc.p_common = " << a.p_common << '\n';
    for (std::size_t k = 0; k < a.p_cp.size(); ++k) {
        std::cout << "alloc.p_cp[" << k + 1 << "] = " << a.p_cp[k] << '\n';
    }
    std::cout << "alloc.p_relay_1 = " << a.p_relay_1 << '\n';
    std::cout << "alloc.p_relay_2 = " << a.p_relay_2 << '\n';
}

int run_achievable(const ChannelFlags& flags, int k_max, int resolution, bool use_example)
{
    const irc::LinearChannel ch = flags.channel();
    irc::RateBreakdown r;
    irc::PowerAllocation a;
    if (use_example) {
        a = irc::example_allocation(ch);
        r = irc::weak_rates(ch, a);
    } else {
        auto best = irc::best_sum_rate(ch, k_max, resolution);
        r = std::move(best.rates);
        a = std::move(best.allocation);
    }

    std::cout << "variant = " << irc::to_string(r.variant) << '\n';
    std::cout << "levels = " << r.r_cp_levels.size() << '\n';
    std::cout << "r_private = " << fixed6(r.r_private) << " bits ("
              << irc::to_string(irc::Constraint::PrivateSinr) << ")\n";
    std::cout << "r_common = " << fixed6(r.r_common) << " bits ("
              << irc::to_string(r.common_binding) << ")\n";
    for (std::size_t k = 0; k < r.r_cp_levels.size(); ++k) {
        std::cout << "r_cp[" << k + 1 << "] = " << fixed6(r.r_cp_levels[k]) << " bits ("
                  << irc::to_string(r.cp_level_binding[k]) << ")\n";
    }
    std::cout << "r_cp_total = " << fixed6(r.r_cp_total) << " bits ("
              << irc::to_string(r.cp_total_binding) << ")\n";
    std::cout << "sum_rate = " << fixed6(r.sum_rate) << " bits\n";
    if (ch.direct_snr() > 1.0) {
        std::cout << "normalized = " << fixed6(r.sum_rate / (0.5 * std::log2(ch.direct_snr())))
                  << '\n';
    }
    print_allocation(a);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"GDoF, sum-capacity bounds and FDF rates of the symmetric Gaussian "
                 "interference relay channel"};
    app.require_subcommand(1);

    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    auto* gdof = app.add_subcommand("gdof", "closed-form sum GDoF with per-argument breakdown");
    gdof->add_option("--alpha", alpha, "interference exponent")->required();
    gdof->add_option("--beta", beta, "relay-destination exponent")->required();
    gdof->add_option("--gamma", gamma, "source-relay exponent")->required();

    irc::SweepOptions sweep_opts;
    std::optional<double> alpha_min;
    std::optional<int> steps;
    std::string ladder = "10,20,30";
    std::string out;
    auto* sweep = app.add_subcommand("sweep", "alpha sweep of formula and numeric GDoF as CSV");
    sweep->add_option("--beta", sweep_opts.beta)->required();
    sweep->add_option("--gamma", sweep_opts.gamma)->required();
    sweep->add_option("--alpha-min", alpha_min, "default: gamma");
    sweep->add_option("--alpha-max", sweep_opts.alpha_max)->capture_default_str();
    sweep->add_option("--steps", steps, "grid points (default: 0.05 spacing)")
        ->check(CLI::Range(2, 1000000));
    sweep->add_option("--snr-ladder", ladder, "comma-separated powers of ten")
        ->capture_default_str();
    sweep->add_option("--k-max", sweep_opts.k_max)->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--resolution", sweep_opts.resolution)
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    sweep->add_option("--out,-o", out, "CSV path (default: stdout)");

    ChannelFlags bound_flags;
    auto* bounds = app.add_subcommand("bounds", "finite-SNR sum-capacity upper bounds");
    bound_flags.attach(*bounds);

    ChannelFlags ach_flags;
    int k_max = 4;
    int resolution = 8;
    bool use_example = false;
    auto* achievable = app.add_subcommand("achievable", "best FDF achievable sum rate");
    ach_flags.attach(*achievable);
    achievable->add_option("--k-max", k_max, "largest number of CP levels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    achievable->add_option("--resolution", resolution, "power grid points per component")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    achievable->add_flag("--use-example-allocation", use_example,
                         "evaluate the analytic ladder allocation instead of searching");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (gdof->parsed()) return run_gdof(alpha, beta, gamma);
        if (sweep->parsed()) return run_sweep(sweep_opts, alpha_min, steps, ladder, out);
        if (bounds->parsed()) return run_bounds(bound_flags);
        if (achievable->parsed()) return run_achievable(ach_flags, k_max, resolution, use_example);
    } catch (const irc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kUsageError;
}
