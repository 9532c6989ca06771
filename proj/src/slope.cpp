#include "irc/slope.hpp"

#include <algorithm>
#include <cmath>

#include "irc/bounds.hpp"
#include "irc/fdf.hpp"

namespace irc {

std::vector<double> default_snr_ladder() { return {1e10, 1e20, 1e30}; }

SlopeEstimate estimate_slope(const RateFunction& rate_fn, const StrengthExponents& e,
                             std::span<const double> ladder, double tol)
{
    if (ladder.empty()) {
        throw DomainError("estimate_slope: ladder is empty");
    }
    if (!(tol > 0.0)) {
        throw DomainError("estimate_slope: tol must be positive");
    }
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (!(ladder[i] > 1.0) || (i > 0 && !(ladder[i] > ladder[i - 1]))) {
            throw DomainError("estimate_slope: ladder must be strictly increasing and > 1");
        }
    }

    SlopeEstimate est;
    est.ladder.assign(ladder.begin(), ladder.end());
    est.slopes.reserve(ladder.size());
    for (double snr : ladder) {
        const LinearChannel ch = realize(e, snr);
        est.slopes.push_back(rate_fn(ch) / (0.5 * std::log2(ch.direct_snr())));
    }
    est.final_slope = est.slopes.back();

    if (est.slopes.size() >= 2) {
        bool shrinking = true;
        double previous_gap = std::abs(est.slopes[1] - est.slopes[0]);
        for (std::size_t i = 2; i < est.slopes.size(); ++i) {
            const double gap = std::abs(est.slopes[i] - est.slopes[i - 1]);
            shrinking = shrinking && gap <= previous_gap;
            previous_gap = gap;
        }
        est.converged = shrinking && previous_gap < tol;
    }
    return est;
}

TheoremCheck verify_theorem1(const StrengthExponents& e, std::span<const double> ladder,
                             int k_max, int resolution, double tol)
{
    TheoremCheck out;
    out.closed_form = gdof_irc(e);

    const auto& args = out.closed_form.args;
    out.converse_flagged = out.closed_form.argmin_index == 3 || out.closed_form.argmin_index == 5;
    out.converse_target = out.converse_flagged ? std::min({args[0], args[1], args[3], args[5]})
                                               : out.closed_form.value;

    out.converse = estimate_slope(
        [](const LinearChannel& ch) { return bound_report(ch).tightest; }, e, ladder, tol);
    out.achievable = estimate_slope(
        [k_max, resolution](const LinearChannel& ch) {
            return best_sum_rate(ch, k_max, resolution).rates.sum_rate;
        },
        e, ladder, tol);

    out.achievable_ok = out.achievable.final_slope >= out.closed_form.value - tol;
    out.converse_ok = out.converse.final_slope >= out.converse_target - tol;
    out.ordering_ok = true;
    for (std::size_t i = 0; i < out.converse.slopes.size(); ++i) {
        out.ordering_ok =
            out.ordering_ok && out.achievable.slopes[i] <= out.converse.slopes[i] + tol;
    }
    out.passed = out.achievable_ok && out.converse_ok && out.ordering_ok;
    return out;
}

}  // namespace irc
