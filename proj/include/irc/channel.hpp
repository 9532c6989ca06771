#pragma once

#include <stdexcept>
#include <string>

namespace irc {

// Base of every error raised by the toolkit. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of a formula (log of a non-positive
// value, snr <= 1, negative gain, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// The exponents fall outside the parameter regime an operation is defined for.
class RegimeError : public Error {
public:
    using Error::Error;
};

// A bound contains a bare gain ratio whose denominator is zero.
class DegenerateChannelError : public Error {
public:
    using Error::Error;
};

// A power allocation violates the per-node power budget or has a negative part.
class InfeasibleAllocationError : public Error {
public:
    using Error::Error;
};

// Link strengths relative to the direct link, on a log(h^2 P) / log(h_d^2 P) scale.
//   alpha: cross (interference) link
//   beta:  relay -> destination link
//   gamma: source -> relay link
struct StrengthExponents {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

// Physical gains of the symmetric interference relay channel with unit-variance
// noise and a common per-node power budget.
struct LinearChannel {
    double h_d = 1.0;   // direct
    double h_c = 0.0;   // cross
    double h_r = 0.0;   // relay -> destination
    double h_sr = 0.0;  // source -> relay
    double power = 1.0;

    double direct_gain2() const { return h_d * h_d; }
    double cross_gain2() const { return h_c * h_c; }
    double relay_gain2() const { return h_r * h_r; }
    double source_relay_gain2() const { return h_sr * h_sr; }

    // Received SNR of each link at full power.
    double direct_snr() const { return direct_gain2() * power; }
    double cross_snr() const { return cross_gain2() * power; }
    double relay_snr() const { return relay_gain2() * power; }
    double source_relay_snr() const { return source_relay_gain2() * power; }
};

// Throws DomainError unless every exponent is finite and non-negative.
void validate(const StrengthExponents& e);

// Throws DomainError unless every gain is finite and non-negative and power > 0.
void validate(const LinearChannel& ch);

/// AWGN capacity C(x) = 1/2 log2(1 + x) in bits per channel use.
/// Throws DomainError for x <= -1.
double capacity(double x);

/// max(0, C(x)). Same domain as capacity().
double capacity_plus(double x);

/// Canonical channel with the given exponents: h_d = 1, power = snr, and
/// h_c^2 P = snr^alpha, h_r^2 P = snr^beta, h_sr^2 P = snr^gamma.
LinearChannel realize(const StrengthExponents& e, double snr);

/// Inverse of realize(): exponents of each link relative to log(h_d^2 P).
/// Every gain-power product must be positive and h_d^2 P > 1.
StrengthExponents recover_exponents(const LinearChannel& ch);

std::string to_string(const StrengthExponents& e);

}  // namespace irc
