#include "irc/bounds.hpp"

#include <cmath>
#include <tuple>

namespace irc {

std::string_view to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::CutsetBroadcast: return "cutset_bc";
    case BoundKind::CutsetMultipleAccess: return "cutset_mac";
    case BoundKind::GenieRelayOutput: return "genie_1";
    case BoundKind::GenieRelayRatio: return "genie_2";
    }
    return "unknown";
}

std::pair<double, double> cutset_bounds(const LinearChannel& ch)
{
    validate(ch);
    const double combined = std::abs(ch.h_d) + std::abs(ch.h_r);
    return {2.0 * capacity(combined * combined * ch.power),
            2.0 * capacity(ch.direct_snr() + ch.source_relay_snr())};
}

double genie_bound_1(const LinearChannel& ch)
{
    validate(ch);
    if (ch.h_c == 0.0) {
        throw DegenerateChannelError("genie bound 1 requires h_c > 0 (h_d^2/h_c^2 undefined)");
    }
    // C+(ratio - 1) is zero for ratio <= 1; branching first keeps ratio - 1 from
    // rounding to -1 when h_c^2 dwarfs h_d^2.
    const double ratio = ch.direct_gain2() / ch.cross_gain2();
    const double gap_term = ratio > 1.0 ? capacity(ratio - 1.0) : 0.0;
    return capacity(2.0 * ch.source_relay_snr()) + capacity(ch.direct_snr() + ch.cross_snr()) +
           gap_term;
}

double genie_bound_2(const LinearChannel& ch)
{
    validate(ch);
    if (ch.h_c == 0.0) {
        throw DegenerateChannelError("genie bound 2 requires h_c > 0 (h_d/h_c undefined)");
    }
    if (ch.h_sr == 0.0) {
        throw DegenerateChannelError("genie bound 2 requires h_sr > 0 (h_c^2/h_sr^2 undefined)");
    }
    const double mismatch = 1.0 - ch.h_d / ch.h_c;
    return 2.0 * capacity(ch.cross_gain2() / ch.source_relay_gain2() + mismatch * mismatch) +
           2.0 * capacity(2.0 * ch.source_relay_snr());
}

BoundReport bound_report(const LinearChannel& ch)
{
    BoundReport r;
    std::tie(r.cutset_bc, r.cutset_mac) = cutset_bounds(ch);
    r.genie_1 = genie_bound_1(ch);
    if (ch.h_sr > 0.0) {
        r.genie_2 = genie_bound_2(ch);
    }

    r.tightest = r.cutset_bc;
    r.tightest_name = BoundKind::CutsetBroadcast;
    auto consider = [&r](double value, BoundKind kind) {
        if (value < r.tightest) {
            r.tightest = value;
            r.tightest_name = kind;
        }
    };
    consider(r.cutset_mac, BoundKind::CutsetMultipleAccess);
    consider(r.genie_1, BoundKind::GenieRelayOutput);
    if (r.genie_2) {
        consider(*r.genie_2, BoundKind::GenieRelayRatio);
    }
    return r;
}

GdofArgs gdof_upper_args(const StrengthExponents& e) { return gdof_min_arguments(e); }

}  // namespace irc
