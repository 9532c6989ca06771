#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "irc/channel.hpp"
#include "irc/gdof.hpp"

namespace irc {

// Finite-SNR sum-capacity upper bounds, in bits per channel use.

enum class BoundKind {
    CutsetBroadcast,      // cut around each destination, relay cooperating
    CutsetMultipleAccess, // cut around the sources, relay listening
    GenieRelayOutput,     // relay observation given to the receivers
    GenieRelayRatio,      // the variant driven by h_c^2 / h_sr^2
};

std::string_view to_string(BoundKind kind);

/// Returns {2 C((|h_d| + |h_r|)^2 P), 2 C(h_d^2 P + h_sr^2 P)}.
std::pair<double, double> cutset_bounds(const LinearChannel& ch);

/// C(2 h_sr^2 P) + C(h_d^2 P + h_c^2 P) + C+(h_d^2 / h_c^2 - 1).
/// Throws DegenerateChannelError when h_c = 0.
double genie_bound_1(const LinearChannel& ch);

/// 2 C(h_c^2 / h_sr^2 + (1 - h_d / h_c)^2) + 2 C(2 h_sr^2 P).
/// Throws DegenerateChannelError when h_c = 0 or h_sr = 0.
double genie_bound_2(const LinearChannel& ch);

struct BoundReport {
    double cutset_bc = 0.0;
    double cutset_mac = 0.0;
    double genie_1 = 0.0;
    // Empty when h_sr = 0: the bound diverges there and never binds.
    std::optional<double> genie_2;
    double tightest = 0.0;
    BoundKind tightest_name = BoundKind::CutsetBroadcast;
};

/// All finite-SNR bounds and their minimum. Ties go to the earlier bound in
/// BoundKind order. A zero cross gain propagates DegenerateChannelError.
BoundReport bound_report(const LinearChannel& ch);

/// The six GDoF-level converse expressions. Arguments 3 and 5 exist only at
/// this level; there is no finite-SNR counterpart for them here.
GdofArgs gdof_upper_args(const StrengthExponents& e);

}  // namespace irc
