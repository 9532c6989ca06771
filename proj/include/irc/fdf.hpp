#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "irc/channel.hpp"

namespace irc {

// Functional decode-and-forward (FDF) achievable rates.
//
// Each user splits its message into a private part, a common part and K
// cooperative-public (CP) levels. The CP levels are nested-lattice coded so the
// relay can decode the modulo sum of both users' level-k codewords, level by
// level. The relay forwards the collection of sums in two Gaussian layers of
// power P_r^(1) and P_r^(2). Receivers decode backwards, and after each desired
// CP level they strip the matching interfering CP level using the relay's sum.
//
// Rates are asymptotic in the number of blocks; no block-edge loss is charged.

struct PowerAllocation {
    double p_private = 0.0;
    double p_common = 0.0;
    std::vector<double> p_cp{0.0};  // levels 1..K, K >= 1
    double p_relay_1 = 0.0;
    double p_relay_2 = 0.0;

    std::size_t levels() const { return p_cp.size(); }
};

// Throws InfeasibleAllocationError unless every component is finite and
// non-negative, K >= 1, private + common + sum(cp) = power within 1e-9 power,
// and relay_1 + relay_2 <= power (1 + 1e-9).
void validate_allocation(const PowerAllocation& alloc, double power);

enum class Variant {
    Weak,    // desired CP level decoded first; private messages allowed
    Strong,  // interfering CP level decoded first; no private message
};

std::string_view to_string(Variant v);

// Which inequality set a rate.
enum class Constraint {
    PrivateSinr,          // private message against cross private interference
    CommonSingle,         // common message, single-user term with min(h_d^2, h_c^2)
    CommonJoint,          // half of the joint common-pair term
    CpRelayCompute,       // relay computes the level-k lattice sum
    CpReceiverDecode,     // receiver decodes the level-k CP codeword
    CpLevelSum,           // total CP rate limited by the sum over levels
    CpRelayForward,       // total CP rate limited by the relay's two-layer forward link
};

std::string_view to_string(Constraint c);

struct RateBreakdown {
    Variant variant = Variant::Weak;
    double r_private = 0.0;
    double r_common = 0.0;
    std::vector<double> r_cp_levels;
    double r_cp_total = 0.0;
    double sum_rate = 0.0;

    Constraint common_binding = Constraint::CommonSingle;
    std::vector<Constraint> cp_level_binding;
    Constraint cp_total_binding = Constraint::CpLevelSum;

    // The two terms of the relay forwarding cap; their sum limits r_cp_total.
    double relay_forward_layer_1 = 0.0;
    double relay_forward_layer_2 = 0.0;
};

/// Achievable rates with private, common and CP messages (weak-interference
/// decoding order).
RateBreakdown weak_rates(const LinearChannel& ch, const PowerAllocation& alloc);

/// Achievable rates with common and CP messages only, where each receiver
/// decodes the interfering CP level before the desired one. Throws
/// InfeasibleAllocationError when p_private > 0.
RateBreakdown strong_rates(const LinearChannel& ch, const PowerAllocation& alloc);

RateBreakdown evaluate(Variant v, const LinearChannel& ch, const PowerAllocation& alloc);

// True when the exponents satisfy beta-1 < gamma <= alpha <= 1 <= beta and
// 2 alpha > 1 + gamma, the regime where example_allocation is defined.
// Non-strict comparisons allow a 1e-9 slack for exponents recovered from gains.
bool in_ladder_regime(const StrengthExponents& e);

/// Number of CP levels used by example_allocation:
/// ceil(log(h_r^2/h_d^2) / log(h_d^2/h_c^2)), at least 1.
std::size_t ladder_levels(const LinearChannel& ch);

/// Analytic allocation for the weak-interference ladder regime:
///   P_p = 1/h_c^2, P_c = h_d^2 P / h_r^2 - P_p, P_r^(1) = P, P_r^(2) = 0,
///   P_cp^(k) = P r^(k-1) - P r^k for k < K, P_cp^(K) = P r^(K-1) - P_c - P_p,
/// with r = h_c^2 / h_d^2. Consecutive CP levels satisfy
/// h_d^2 P_cp^(k+1) = h_c^2 P_cp^(k), so the next desired level arrives at the
/// same power as the interfering level being decoded.
/// Throws RegimeError outside the regime and InfeasibleAllocationError when
/// any component comes out negative.
PowerAllocation example_allocation(const LinearChannel& ch);

/// h_d^2 P_cp^(k+1) == h_c^2 P_cp^(k) within 1e-9 relative for k = 1..K-2.
bool cp_ladder_check(const LinearChannel& ch, const PowerAllocation& alloc);

/// Checks that the relay forwarding terms used for the CP cap are no larger than
/// the rates at which a receiver can decode the relay layers on their own
/// (the last block, where only the relay transmits).
bool relay_constraint_dominance(const LinearChannel& ch, const PowerAllocation& alloc);

struct BestRate {
    RateBreakdown rates;
    PowerAllocation allocation;
    Variant variant = Variant::Weak;
};

/// Maximizes the FDF sum rate over both variants, K in 1..k_max and a
/// deterministic power grid (see fdf.cpp), plus the analytic ladder allocation
/// when its regime applies. Ties keep the lexicographically first
/// (variant, K, grid index).
BestRate best_sum_rate(const LinearChannel& ch, int k_max, int resolution);

}  // namespace irc
