#include <cmath>
#include <numeric>

#include "doctest.h"
#include "irc/bounds.hpp"
#include "irc/fdf.hpp"
#include "oracle.hpp"

using doctest::Approx;

namespace {

oracle::Gains gains_of(const irc::LinearChannel& ch)
{
    return {ch.direct_gain2(), ch.cross_gain2(), ch.relay_gain2(), ch.source_relay_gain2(),
            ch.power};
}

oracle::Split split_of(const irc::PowerAllocation& a)
{
    return {a.p_private, a.p_common, a.p_cp, a.p_relay_1, a.p_relay_2};
}

irc::LinearChannel random_channel(oracle::Sampler& rng)
{
    return {rng.log_uniform(1e-2, 1e2), rng.log_uniform(1e-2, 1e2), rng.log_uniform(1e-2, 1e2),
            rng.log_uniform(1e-2, 1e2), rng.log_uniform(1e-2, 1e8)};
}

irc::PowerAllocation random_allocation(oracle::Sampler& rng, double P, bool strong)
{
    const int K = rng.integer(1, 5);
    auto w = rng.simplex(static_cast<std::size_t>(K) + 2, P);
    irc::PowerAllocation a;
    if (strong) {
        a.p_private = 0.0;
        a.p_common = w[0] + w[1];
    } else {
        a.p_private = w[0];
        a.p_common = w[1];
    }
    a.p_cp.assign(w.begin() + 2, w.end());
    const double relay_total = P * rng.uniform(0.0, 1.0);
    const double split = rng.uniform(0.0, 1.0);
    a.p_relay_1 = relay_total * split;
    a.p_relay_2 = relay_total * (1.0 - split);
    return a;
}

}  // namespace

TEST_CASE("weak-variant rates, no CP power")
{
    const irc::LinearChannel ch{1.0, 1.0, 0.0, 0.0, 1.0};
    irc::PowerAllocation a;
    a.p_common = 1.0;
    const auto r = irc::weak_rates(ch, a);
    // 2 min(C(1), C(2)/2) = C(2) = log2(3)/2.
    CHECK(r.sum_rate == Approx(0.5 * std::log2(3.0)).epsilon(1e-14));
    CHECK(r.sum_rate == Approx(0.7925).epsilon(1e-4));
    CHECK(r.r_cp_total == 0.0);
    CHECK(r.common_binding == irc::Constraint::CommonJoint);
}

TEST_CASE("deaf relay carries no CP rate")
{
    const irc::LinearChannel ch{1.0, 0.6, 2.0, 0.0, 100.0};
    irc::PowerAllocation a;
    a.p_private = 10.0;
    a.p_common = 40.0;
    a.p_cp = {50.0};
    a.p_relay_1 = 100.0;
    const auto weak = irc::weak_rates(ch, a);
    CHECK(weak.r_cp_levels[0] == 0.0);
    CHECK(weak.cp_level_binding[0] == irc::Constraint::CpRelayCompute);

    a.p_common += a.p_private;
    a.p_private = 0.0;
    const auto strong = irc::strong_rates(ch, a);
    CHECK(strong.r_cp_total == 0.0);
}

TEST_CASE("strong-variant rates")
{
    SUBCASE("degenerate case matches the weak one")
    {
        irc::PowerAllocation a;
        a.p_common = 1.0;
        const auto r = irc::strong_rates({1.0, 1.0, 0.0, 0.0, 1.0}, a);
        CHECK(r.sum_rate == Approx(0.5 * std::log2(3.0)).epsilon(1e-14));
    }
    SUBCASE("CP level decoded against the cross gain")
    {
        // h_c^2 = 100, h_d^2 = 1, one CP level at power 1, no common power.
        const irc::LinearChannel ch{1.0, 10.0, 0.0, 100.0, 1.0};
        irc::PowerAllocation a;
        a.p_cp = {1.0};
        const auto r = irc::strong_rates(ch, a);
        CHECK(r.cp_level_binding[0] == irc::Constraint::CpReceiverDecode);
        CHECK(r.r_cp_levels[0] == Approx(0.5 * std::log2(51.0)).epsilon(1e-14));
    }
    SUBCASE("private power is rejected")
    {
        irc::PowerAllocation a;
        a.p_private = 0.5;
        a.p_common = 0.5;
        CHECK_THROWS_AS(irc::strong_rates({1.0, 1.0, 0.0, 0.0, 1.0}, a),
                        irc::InfeasibleAllocationError);
    }
}

TEST_CASE("allocation feasibility")
{
    const irc::LinearChannel ch{1.0, 1.0, 1.0, 1.0, 1.0};
    irc::PowerAllocation a;
    a.p_common = 0.9;
    CHECK_THROWS_AS(irc::weak_rates(ch, a), irc::InfeasibleAllocationError);
    a.p_common = 1.0;
    a.p_relay_1 = 0.7;
    a.p_relay_2 = 0.7;
    CHECK_THROWS_AS(irc::weak_rates(ch, a), irc::InfeasibleAllocationError);
    a.p_relay_2 = 0.3;
    CHECK_NOTHROW(irc::weak_rates(ch, a));
    a.p_cp.clear();
    CHECK_THROWS_AS(irc::weak_rates(ch, a), irc::InfeasibleAllocationError);
    a.p_cp = {-0.1};
    a.p_common = 1.1;
    CHECK_THROWS_AS(irc::weak_rates(ch, a), irc::InfeasibleAllocationError);
}

TEST_CASE("rates agree with the loop-based oracle")
{
    oracle::Sampler rng(41);
    for (int i = 0; i < 1000; ++i) {
        const auto ch = random_channel(rng);
        const bool strong = i % 2 == 1;
        const auto a = random_allocation(rng, ch.power, strong);
        const auto r = strong ? irc::strong_rates(ch, a) : irc::weak_rates(ch, a);
        CHECK(r.sum_rate ==
              Approx(oracle::fdf_sum_rate(strong, gains_of(ch), split_of(a))).epsilon(1e-12));
    }
}

TEST_CASE("rate breakdown invariants")
{
    oracle::Sampler rng(42);
    for (int i = 0; i < 1000; ++i) {
        const auto ch = random_channel(rng);
        const bool strong = i % 2 == 0;
        const auto a = random_allocation(rng, ch.power, strong);
        const auto r = irc::evaluate(strong ? irc::Variant::Strong : irc::Variant::Weak, ch, a);

        CHECK(r.r_private >= 0.0);
        CHECK(r.r_common >= 0.0);
        for (double x : r.r_cp_levels) CHECK(x >= 0.0);
        const double level_sum = std::accumulate(r.r_cp_levels.begin(), r.r_cp_levels.end(), 0.0);
        const double forward = r.relay_forward_layer_1 + r.relay_forward_layer_2;
        CHECK(r.r_cp_total <= level_sum);
        CHECK(r.r_cp_total <= forward);
        if (r.cp_total_binding == irc::Constraint::CpLevelSum) {
            CHECK(r.r_cp_total == level_sum);
        } else {
            CHECK(r.r_cp_total == forward);
        }
        CHECK(r.sum_rate == Approx(2.0 * (r.r_private + r.r_common + r.r_cp_total)));
        if (strong) CHECK(r.r_private == 0.0);
    }
}

TEST_CASE("relay layer 2 only hurts CP levels")
{
    oracle::Sampler rng(43);
    for (int i = 0; i < 500; ++i) {
        const auto ch = random_channel(rng);
        const bool strong = i % 2 == 0;
        auto a = random_allocation(rng, ch.power, strong);
        a.p_relay_1 = 0.25 * ch.power;
        a.p_relay_2 = 0.25 * ch.power;
        const auto v = strong ? irc::Variant::Strong : irc::Variant::Weak;
        const auto before = irc::evaluate(v, ch, a);
        a.p_relay_2 = 0.75 * ch.power;
        const auto after = irc::evaluate(v, ch, a);
        for (std::size_t k = 0; k < before.r_cp_levels.size(); ++k) {
            CHECK(after.r_cp_levels[k] <= before.r_cp_levels[k]);
        }
    }
}

TEST_CASE("ladder allocation")
{
    SUBCASE("single level")
    {
        const auto ch = irc::realize({0.7, 1.1, 0.2}, 1e10);
        CHECK(irc::ladder_levels(ch) == 1);
        const auto a = irc::example_allocation(ch);
        CHECK(a.levels() == 1);
        CHECK(a.p_private == Approx(1.0 / ch.cross_gain2()));
        CHECK(a.p_relay_1 == ch.power);
        CHECK(a.p_relay_2 == 0.0);
        CHECK(irc::cp_ladder_check(ch, a));
    }
    SUBCASE("two levels")
    {
        const auto ch = irc::realize({0.95, 1.1, 0.2}, 1e10);
        CHECK(irc::ladder_levels(ch) == 2);
        const auto a = irc::example_allocation(ch);
        CHECK(a.levels() == 2);
        CHECK(irc::cp_ladder_check(ch, a));
    }
    SUBCASE("several levels keep the ladder identity")
    {
        // (beta - 1)/(1 - alpha) = 4.5 -> K = 5.
        const auto ch = irc::realize({0.9, 1.45, 0.5}, 1e20);
        const auto a = irc::example_allocation(ch);
        REQUIRE(a.levels() == 5);
        CHECK(irc::cp_ladder_check(ch, a));
        for (std::size_t k = 0; k + 2 < a.levels(); ++k) {
            CHECK(ch.direct_gain2() * a.p_cp[k + 1] ==
                  Approx(ch.cross_gain2() * a.p_cp[k]).epsilon(1e-12));
        }
        auto broken = a;
        broken.p_cp[1] *= 1.01;
        CHECK_FALSE(irc::cp_ladder_check(ch, broken));
    }
    SUBCASE("ledger sums to P")
    {
        oracle::Sampler rng(44);
        int tested = 0;
        while (tested < 200) {
            const double alpha = rng.uniform(0.5, 1.0);
            const double gamma = rng.uniform(0.0, alpha);
            const double beta = rng.uniform(1.0, 2.0);
            const irc::StrengthExponents e{alpha, beta, gamma};
            if (!irc::in_ladder_regime(e) || alpha > 0.98) continue;
            const auto ch = irc::realize(e, rng.log_uniform(1e6, 1e30));
            const auto a = irc::example_allocation(ch);
            const double total =
                a.p_private + a.p_common + std::accumulate(a.p_cp.begin(), a.p_cp.end(), 0.0);
            CHECK(std::abs(total - ch.power) <= 1e-9 * ch.power);
            CHECK(irc::cp_ladder_check(ch, a));
            ++tested;
        }
    }
    SUBCASE("regime gate")
    {
        // beta - 1 = 0.4 is not below gamma = 0.1.
        CHECK_THROWS_AS(irc::example_allocation(irc::realize({0.9, 1.4, 0.1}, 1e10)),
                        irc::RegimeError);
        // 2 alpha <= 1 + gamma.
        CHECK_THROWS_AS(irc::example_allocation(irc::realize({0.55, 1.05, 0.2}, 1e10)),
                        irc::RegimeError);
        CHECK_THROWS_AS(irc::example_allocation({1.0, 0.0, 1.0, 1.0, 100.0}), irc::RegimeError);
    }
    SUBCASE("rate reaches the closed form at high SNR")
    {
        const double snr = 1e30;
        const auto ch = irc::realize({0.7, 1.1, 0.2}, snr);
        const auto r = irc::weak_rates(ch, irc::example_allocation(ch));
        CHECK(std::abs(r.sum_rate / (0.5 * std::log2(snr)) - 1.4) < 0.1);
    }
}

TEST_CASE("relay forwarding terms dominate the last-block constraints")
{
    const irc::LinearChannel silent{1.0, 0.5, 0.0, 1.0, 10.0};
    irc::PowerAllocation a;
    a.p_common = 10.0;
    a.p_relay_1 = 10.0;
    CHECK(irc::relay_constraint_dominance(silent, a));
    CHECK(irc::relay_constraint_dominance({1.0, 0.5, 3.0, 1.0, 10.0}, a));

    oracle::Sampler rng(45);
    for (int i = 0; i < 1000; ++i) {
        const auto ch = random_channel(rng);
        CHECK(irc::relay_constraint_dominance(ch, random_allocation(rng, ch.power, i % 2 == 0)));
    }
}

TEST_CASE("optimizer")
{
    SUBCASE("degenerate channel")
    {
        const auto best = irc::best_sum_rate({1.0, 1.0, 0.0, 0.0, 1.0}, 2, 4);
        CHECK(best.rates.sum_rate >= 0.5 * std::log2(3.0) - 1e-12);
    }
    SUBCASE("ladder regime")
    {
        const double snr = 1e30;
        const auto ch = irc::realize({0.7, 1.1, 0.2}, snr);
        const auto best = irc::best_sum_rate(ch, 4, 6);
        const double ladder = irc::weak_rates(ch, irc::example_allocation(ch)).sum_rate;
        CHECK(best.rates.sum_rate >= ladder);
        CHECK(best.rates.sum_rate / (0.5 * std::log2(snr)) >= 1.4 - 0.1);
    }
    SUBCASE("argument validation")
    {
        CHECK_THROWS_AS(irc::best_sum_rate({1.0, 1.0, 0.0, 0.0, 1.0}, 0, 4), irc::DomainError);
        CHECK_THROWS_AS(irc::best_sum_rate({1.0, 1.0, 0.0, 0.0, 1.0}, 1, 1), irc::DomainError);
    }
    SUBCASE("deterministic")
    {
        const auto ch = irc::realize({1.3, 1.6, 0.9}, 1e12);
        const auto x = irc::best_sum_rate(ch, 3, 5);
        const auto y = irc::best_sum_rate(ch, 3, 5);
        CHECK(x.rates.sum_rate == y.rates.sum_rate);
        CHECK(x.allocation.p_cp == y.allocation.p_cp);
        CHECK(x.variant == y.variant);
    }
    SUBCASE("never above the converse")
    {
        oracle::Sampler rng(46);
        for (int i = 0; i < 300; ++i) {
            const auto ch = random_channel(rng);
            const auto best = irc::best_sum_rate(ch, 2, 3);
            CHECK(best.rates.sum_rate <= irc::bound_report(ch).tightest + 1e-9);
        }
    }
}
