#include "irc/gdof.hpp"

#include <algorithm>
#include <cmath>

namespace irc {

namespace {
constexpr double kTieTolerance = 1e-12;
}  // namespace

GdofArgs gdof_min_arguments(const StrengthExponents& e)
{
    const double a = e.alpha;
    const double b = e.beta;
    const double g = e.gamma;
    return {
        2.0 * std::max(1.0, b),
        2.0 * std::max(1.0, g),
        std::max({1.0, a, b}) + std::max(1.0, a) - a,
        2.0 * std::max(1.0, a) + g - a,
        2.0 * std::max({a, b, 1.0 - a}),
        2.0 * std::max(a, 1.0 + g - a),
    };
}

GdofBreakdown gdof_irc(const StrengthExponents& e)
{
    validate(e);
    if (e.gamma > e.alpha) {
        throw RegimeError("regime gamma>alpha not characterized");
    }
    GdofBreakdown out;
    out.args = gdof_min_arguments(e);
    out.value = *std::min_element(out.args.begin(), out.args.end());
    // Arguments that agree up to rounding count as tied; the lowest index wins.
    for (std::size_t i = 0; i < out.args.size(); ++i) {
        if (out.args[i] <= out.value + kTieTolerance) {
            out.argmin_index = static_cast<int>(i) + 1;
            break;
        }
    }
    return out;
}

double gdof_ic(double alpha)
{
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw DomainError("gdof_ic: alpha must be finite and non-negative");
    }
    if (alpha <= 0.5) return 2.0 * (1.0 - alpha);
    if (alpha <= 2.0 / 3.0) return 2.0 * alpha;
    if (alpha <= 1.0) return 2.0 - alpha;
    if (alpha <= 2.0) return alpha;
    return 2.0;
}

std::vector<GainPoint> gdof_gain_region(double beta, double gamma,
                                        std::span<const double> alpha_grid)
{
    std::vector<GainPoint> out;
    out.reserve(alpha_grid.size());
    for (double alpha : alpha_grid) {
        GainPoint p;
        p.alpha = alpha;
        p.d_irc = gdof_irc({alpha, beta, gamma}).value;
        p.d_ic = gdof_ic(alpha);
        p.gain = p.d_irc > p.d_ic + 1e-12;
        out.push_back(p);
    }
    return out;
}

}  // namespace irc
