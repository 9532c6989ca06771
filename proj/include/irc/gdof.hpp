#pragma once

#include <array>
#include <span>
#include <vector>

#include "irc/channel.hpp"

namespace irc {

// The six arguments of the closed-form sum-GDoF minimum, in this order:
//   1. 2 max(1, beta)                         relay-side cut-set
//   2. 2 max(1, gamma)                        source-side cut-set
//   3. max(1, alpha, beta) + max(1, alpha) - alpha
//   4. 2 max(1, alpha) + gamma - alpha        genie bound, relay observation
//   5. 2 max(alpha, beta, 1 - alpha)
//   6. 2 max(alpha, 1 + gamma - alpha)        genie bound, relay ratio
using GdofArgs = std::array<double, 6>;

struct GdofBreakdown {
    GdofArgs args{};
    double value = 0.0;
    int argmin_index = 1;  // 1-based; lowest index wins ties
};

// Pure exponent arithmetic for the six arguments. No regime check.
GdofArgs gdof_min_arguments(const StrengthExponents& e);

/// Sum GDoF of the symmetric interference relay channel for gamma <= alpha.
/// Throws RegimeError when gamma > alpha.
GdofBreakdown gdof_irc(const StrengthExponents& e);

/// Sum GDoF of the symmetric two-user interference channel without a relay
/// (the "W" curve).
double gdof_ic(double alpha);

struct GainPoint {
    double alpha = 0.0;
    double d_irc = 0.0;
    double d_ic = 0.0;
    bool gain = false;  // d_irc > d_ic + 1e-12
};

// Compares gdof_irc and gdof_ic over an alpha grid at fixed (beta, gamma).
std::vector<GainPoint> gdof_gain_region(double beta, double gamma,
                                        std::span<const double> alpha_grid);

}  // namespace irc
