#include "irc/fdf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

namespace irc {

namespace {

constexpr double kLedgerTolerance = 1e-9;
constexpr double kRegimeSlack = 1e-9;

bool finite_nonnegative(double x) { return std::isfinite(x) && x >= 0.0; }

// suffix[k] = sum of p_cp[k..K-1]; suffix[K] = 0.
std::vector<double> suffix_sums(const std::vector<double>& p_cp)
{
    std::vector<double> suffix(p_cp.size() + 1, 0.0);
    for (std::size_t k = p_cp.size(); k-- > 0;) {
        suffix[k] = suffix[k + 1] + p_cp[k];
    }
    return suffix;
}

struct ForwardTerms {
    double layer_1;
    double layer_2;
};

// The relay's two Gaussian layers as seen by a receiver in a block where the
// sources also transmit: layer 1 is decoded first against everything, layer 2
// after all CP signals have been stripped.
ForwardTerms forward_terms(const LinearChannel& ch, const PowerAllocation& a)
{
    const double hr2 = ch.relay_gain2();
    const double residual = (ch.direct_gain2() + ch.cross_gain2()) * (a.p_common + a.p_private);
    return {capacity(hr2 * a.p_relay_1 /
                     (1.0 + hr2 * a.p_relay_2 + ch.direct_snr() + ch.cross_snr())),
            capacity(hr2 * a.p_relay_2 / (1.0 + residual))};
}

RateBreakdown fdf_rates(Variant variant, const LinearChannel& ch, const PowerAllocation& a)
{
    validate(ch);
    validate_allocation(a, ch.power);
    if (variant == Variant::Strong && a.p_private > 0.0) {
        throw InfeasibleAllocationError(
            "strong-interference FDF carries no private message; p_private must be 0");
    }

    const double hd2 = ch.direct_gain2();
    const double hc2 = ch.cross_gain2();
    const double hr2 = ch.relay_gain2();
    const double hsr2 = ch.source_relay_gain2();
    const double pp = a.p_private;
    const double pc = a.p_common;
    const double both2 = hd2 + hc2;

    RateBreakdown r;
    r.variant = variant;
    r.r_private = capacity(hd2 * pp / (1.0 + hc2 * pp));

    const double common_noise = 1.0 + both2 * pp;
    const double single = capacity(std::min(hd2, hc2) * pc / common_noise);
    const double joint = 0.5 * capacity(both2 * pc / common_noise);
    r.r_common = std::min(single, joint);
    r.common_binding = single <= joint ? Constraint::CommonSingle : Constraint::CommonJoint;

    // In the weak order the receiver decodes its own level k first, so the
    // desired gain is h_d and the interfering level k is still present. The
    // strong order swaps the roles of h_d and h_c.
    const double desired2 = variant == Variant::Weak ? hd2 : hc2;
    const double other2 = variant == Variant::Weak ? hc2 : hd2;

    const auto suffix = suffix_sums(a.p_cp);
    const std::size_t K = a.levels();
    r.r_cp_levels.resize(K);
    r.cp_level_binding.resize(K);
    for (std::size_t k = 0; k < K; ++k) {
        const double above = suffix[k + 1];
        const double relay_sinr =
            hsr2 * a.p_cp[k] / (1.0 + 2.0 * hsr2 * above + 2.0 * hsr2 * pc + 2.0 * hsr2 * pp);
        const double at_relay = capacity_plus(relay_sinr - 0.5);
        const double at_receiver =
            capacity(desired2 * a.p_cp[k] /
                     (1.0 + desired2 * above + other2 * suffix[k] + both2 * (pc + pp) +
                      hr2 * a.p_relay_2));
        if (at_relay <= at_receiver) {
            r.r_cp_levels[k] = at_relay;
            r.cp_level_binding[k] = Constraint::CpRelayCompute;
        } else {
            r.r_cp_levels[k] = at_receiver;
            r.cp_level_binding[k] = Constraint::CpReceiverDecode;
        }
    }

    const auto fwd = forward_terms(ch, a);
    r.relay_forward_layer_1 = fwd.layer_1;
    r.relay_forward_layer_2 = fwd.layer_2;
    const double level_sum = std::accumulate(r.r_cp_levels.begin(), r.r_cp_levels.end(), 0.0);
    const double forward_cap = fwd.layer_1 + fwd.layer_2;
    if (level_sum <= forward_cap) {
        r.r_cp_total = level_sum;
        r.cp_total_binding = Constraint::CpLevelSum;
    } else {
        r.r_cp_total = forward_cap;
        r.cp_total_binding = Constraint::CpRelayForward;
    }

    r.sum_rate = 2.0 * (r.r_private + r.r_common + r.r_cp_total);
    return r;
}

}  // namespace

void validate_allocation(const PowerAllocation& a, double power)
{
    if (a.p_cp.empty()) {
        throw InfeasibleAllocationError("allocation needs at least one CP level (K >= 1)");
    }
    if (!finite_nonnegative(a.p_private) || !finite_nonnegative(a.p_common) ||
        !finite_nonnegative(a.p_relay_1) || !finite_nonnegative(a.p_relay_2) ||
        !std::all_of(a.p_cp.begin(), a.p_cp.end(), finite_nonnegative)) {
        throw InfeasibleAllocationError("allocation powers must be finite and non-negative");
    }
    const double source_total =
        a.p_private + a.p_common + std::accumulate(a.p_cp.begin(), a.p_cp.end(), 0.0);
    if (std::abs(source_total - power) > kLedgerTolerance * power) {
        throw InfeasibleAllocationError("source powers must sum to P (got " +
                                        std::to_string(source_total) + ", P = " +
                                        std::to_string(power) + ")");
    }
    if (a.p_relay_1 + a.p_relay_2 > power * (1.0 + kLedgerTolerance)) {
        throw InfeasibleAllocationError("relay powers exceed P");
    }
}

std::string_view to_string(Variant v)
{
    return v == Variant::Weak ? "weak" : "strong";
}

std::string_view to_string(Constraint c)
{
    switch (c) {
    case Constraint::PrivateSinr: return "private_sinr";
    case Constraint::CommonSingle: return "common_single";
    case Constraint::CommonJoint: return "common_joint";
    case Constraint::CpRelayCompute: return "cp_relay_compute";
    case Constraint::CpReceiverDecode: return "cp_receiver_decode";
    case Constraint::CpLevelSum: return "cp_level_sum";
    case Constraint::CpRelayForward: return "cp_relay_forward";
    }
    return "unknown";
}

RateBreakdown weak_rates(const LinearChannel& ch, const PowerAllocation& alloc)
{
    return fdf_rates(Variant::Weak, ch, alloc);
}

RateBreakdown strong_rates(const LinearChannel& ch, const PowerAllocation& alloc)
{
    return fdf_rates(Variant::Strong, ch, alloc);
}

RateBreakdown evaluate(Variant v, const LinearChannel& ch, const PowerAllocation& alloc)
{
    return fdf_rates(v, ch, alloc);
}

bool in_ladder_regime(const StrengthExponents& e)
{
    return e.beta - 1.0 < e.gamma && e.gamma <= e.alpha + kRegimeSlack &&
           e.alpha <= 1.0 + kRegimeSlack && 1.0 <= e.beta + kRegimeSlack &&
           2.0 * e.alpha > 1.0 + e.gamma;
}

std::size_t ladder_levels(const LinearChannel& ch)
{
    const double hd2 = ch.direct_gain2();
    const double hc2 = ch.cross_gain2();
    const double hr2 = ch.relay_gain2();
    if (!(hc2 > 0.0) || !(hd2 > hc2)) {
        throw RegimeError("ladder allocation needs 0 < h_c^2 < h_d^2");
    }
    if (!(hr2 > 0.0)) {
        throw RegimeError("ladder allocation needs h_r > 0");
    }
    const double ratio = std::log(hr2 / hd2) / std::log(hd2 / hc2);
    // The slack keeps an exact integer ratio, perturbed by rounding, from
    // adding an empty top level.
    const double k = std::ceil(ratio - 1e-9);
    return k < 1.0 ? std::size_t{1} : static_cast<std::size_t>(k);
}

PowerAllocation example_allocation(const LinearChannel& ch)
{
    validate(ch);
    StrengthExponents e;
    try {
        e = recover_exponents(ch);
    } catch (const DomainError& err) {
        throw RegimeError(std::string("ladder allocation: ") + err.what());
    }
    if (!in_ladder_regime(e)) {
        throw RegimeError("ladder allocation requires beta-1 < gamma <= alpha <= 1 <= beta and "
                          "2 alpha > 1 + gamma; got " +
                          to_string(e));
    }

    const double hd2 = ch.direct_gain2();
    const double hc2 = ch.cross_gain2();
    const double hr2 = ch.relay_gain2();
    const double P = ch.power;
    const std::size_t K = ladder_levels(ch);
    const double ratio = hc2 / hd2;

    PowerAllocation a;
    a.p_private = 1.0 / hc2;
    a.p_common = hd2 * P / hr2 - a.p_private;
    if (a.p_common < 0.0) {
        throw InfeasibleAllocationError("ladder allocation: common power h_d^2 P/h_r^2 - 1/h_c^2 "
                                        "is negative");
    }
    a.p_cp.assign(K, 0.0);
    for (std::size_t k = 0; k + 1 < K; ++k) {
        a.p_cp[k] = P * std::pow(ratio, static_cast<double>(k)) * (1.0 - ratio);
    }
    a.p_cp[K - 1] = P * std::pow(ratio, static_cast<double>(K - 1)) - a.p_common - a.p_private;
    if (a.p_cp[K - 1] < 0.0) {
        throw InfeasibleAllocationError("ladder allocation: top CP level power is negative");
    }
    a.p_relay_1 = P;
    a.p_relay_2 = 0.0;
    return a;
}

bool cp_ladder_check(const LinearChannel& ch, const PowerAllocation& alloc)
{
    const double hd2 = ch.direct_gain2();
    const double hc2 = ch.cross_gain2();
    const std::size_t K = alloc.levels();
    // Level K carries the -P_c - P_p correction and is excluded.
    for (std::size_t k = 0; k + 2 < K; ++k) {
        const double lhs = hd2 * alloc.p_cp[k + 1];
        const double rhs = hc2 * alloc.p_cp[k];
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        if (std::abs(lhs - rhs) > 1e-9 * scale) {
            return false;
        }
    }
    return true;
}

bool relay_constraint_dominance(const LinearChannel& ch, const PowerAllocation& alloc)
{
    const double hr2 = ch.relay_gain2();
    const auto fwd = forward_terms(ch, alloc);
    const double alone_1 = capacity(hr2 * alloc.p_relay_1 / (1.0 + hr2 * alloc.p_relay_2));
    const double alone_2 = capacity(hr2 * alloc.p_relay_2);
    return fwd.layer_1 <= alone_1 && fwd.layer_2 <= alone_2;
}

// Search grid. With rho = max(all link SNRs, 2) the fraction ladder is
// {0} U {rho^(-j/(res-1)) : j = 0..res-1}, i.e. evenly spaced in the exponent
// domain where GDoF-optimal splits live. Per candidate:
//   P_p, P_c         fractions of P (P_p = 0 for the strong variant), P_p + P_c <= P
//   CP levels        remainder R = P - P_p - P_c split as R q^(k-1)(1-q), top level R q^(K-1)
//   relay            P_r^(2) a fraction of P, P_r^(1) = P - P_r^(2)
BestRate best_sum_rate(const LinearChannel& ch, int k_max, int resolution)
{
    validate(ch);
    if (k_max < 1) throw DomainError("best_sum_rate: k_max must be >= 1");
    if (resolution < 2) throw DomainError("best_sum_rate: resolution must be >= 2");

    const double P = ch.power;
    const double rho = std::max({ch.direct_snr(), ch.cross_snr(), ch.relay_snr(),
                                 ch.source_relay_snr(), 2.0});
    std::vector<double> fractions;
    fractions.reserve(static_cast<std::size_t>(resolution) + 1);
    fractions.push_back(0.0);
    for (int j = 0; j < resolution; ++j) {
        fractions.push_back(std::pow(rho, -static_cast<double>(j) / (resolution - 1)));
    }
    // q = 0 puts all CP power on level 1; q = 1 on level K.
    const std::vector<double>& ladder_q = fractions;

    using Key = std::tuple<int, int, long>;
    BestRate best;
    Key best_key{};
    bool have = false;
    auto offer = [&](Variant v, const PowerAllocation& a, Key key) {
        RateBreakdown r = evaluate(v, ch, a);
        if (!have || r.sum_rate > best.rates.sum_rate ||
            (r.sum_rate == best.rates.sum_rate && key < best_key)) {
            best.rates = std::move(r);
            best.allocation = a;
            best.variant = v;
            best_key = key;
            have = true;
        }
    };

    // The analytic ladder allocation enters ahead of the grid at its own K.
    try {
        const StrengthExponents e = recover_exponents(ch);
        if (in_ladder_regime(e)) {
            const PowerAllocation a = example_allocation(ch);
            offer(Variant::Weak, a, Key{0, static_cast<int>(a.levels()), -1});
        }
    } catch (const Error&) {
        // Degenerate or out-of-regime channels simply skip the analytic candidate.
    }

    for (int vi = 0; vi < 2; ++vi) {
        const Variant v = vi == 0 ? Variant::Weak : Variant::Strong;
        for (int K = 1; K <= k_max; ++K) {
            long grid_index = 0;
            PowerAllocation a;
            a.p_cp.assign(static_cast<std::size_t>(K), 0.0);
            const std::size_t n_private = v == Variant::Weak ? fractions.size() : 1;
            const std::size_t n_q = K == 1 ? 1 : ladder_q.size();
            for (std::size_t ip = 0; ip < n_private; ++ip) {
                for (double fc : fractions) {
                    const double pp = fractions[ip] * P;
                    const double pc = fc * P;
                    if (pp + pc > P) continue;
                    const double rem = std::max(0.0, P - pp - pc);
                    for (std::size_t iq = 0; iq < n_q; ++iq) {
                        const double q = ladder_q[iq];
                        double level = rem;
                        for (int k = 0; k + 1 < K; ++k) {
                            a.p_cp[static_cast<std::size_t>(k)] = level * (1.0 - q);
                            level *= q;
                        }
                        a.p_cp[static_cast<std::size_t>(K - 1)] = level;
                        a.p_private = pp;
                        a.p_common = pc;
                        for (double fr : fractions) {
                            a.p_relay_2 = fr * P;
                            a.p_relay_1 = P - a.p_relay_2;
                            offer(v, a, Key{vi, K, grid_index++});
                        }
                    }
                }
            }
        }
    }
    return best;
}

}  // namespace irc
