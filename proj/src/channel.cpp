#include "irc/channel.hpp"

#include <cmath>
#include <sstream>

namespace irc {

namespace {

bool finite_nonnegative(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void validate(const StrengthExponents& e)
{
    if (!finite_nonnegative(e.alpha) || !finite_nonnegative(e.beta) ||
        !finite_nonnegative(e.gamma)) {
        throw DomainError("strength exponents must be finite and non-negative, got " +
                          to_string(e));
    }
}

void validate(const LinearChannel& ch)
{
    if (!finite_nonnegative(ch.h_d) || !finite_nonnegative(ch.h_c) ||
        !finite_nonnegative(ch.h_r) || !finite_nonnegative(ch.h_sr)) {
        throw DomainError("channel gains must be finite and non-negative");
    }
    if (!std::isfinite(ch.power) || ch.power <= 0.0) {
        throw DomainError("power must be finite and strictly positive");
    }
}

double capacity(double x)
{
    if (!(x > -1.0)) {
        throw DomainError("capacity: argument must exceed -1");
    }
    return 0.5 * std::log2(1.0 + x);
}

double capacity_plus(double x)
{
    const double c = capacity(x);
    return c > 0.0 ? c : 0.0;
}

LinearChannel realize(const StrengthExponents& e, double snr)
{
    validate(e);
    if (!std::isfinite(snr) || !(snr > 1.0)) {
        throw DomainError("realize: snr must be finite and greater than 1");
    }
    // Gains are stored as amplitudes; h^2 = snr^(exponent - 1).
    LinearChannel ch;
    ch.h_d = 1.0;
    ch.h_c = std::pow(snr, 0.5 * (e.alpha - 1.0));
    ch.h_r = std::pow(snr, 0.5 * (e.beta - 1.0));
    ch.h_sr = std::pow(snr, 0.5 * (e.gamma - 1.0));
    ch.power = snr;
    return ch;
}

StrengthExponents recover_exponents(const LinearChannel& ch)
{
    validate(ch);
    const double normalizer = ch.direct_snr();
    if (!(normalizer > 1.0)) {
        throw DomainError("recover_exponents: h_d^2 P must exceed 1");
    }
    if (ch.cross_snr() <= 0.0 || ch.relay_snr() <= 0.0 || ch.source_relay_snr() <= 0.0) {
        throw DomainError("recover_exponents: every gain-power product must be positive");
    }
    const double log_norm = std::log(normalizer);
    return {std::log(ch.cross_snr()) / log_norm, std::log(ch.relay_snr()) / log_norm,
            std::log(ch.source_relay_snr()) / log_norm};
}

std::string to_string(const StrengthExponents& e)
{
    std::ostringstream os;
    os << "(alpha=" << e.alpha << ", beta=" << e.beta << ", gamma=" << e.gamma << ")";
    return os.str();
}

}  // namespace irc
