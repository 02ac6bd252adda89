#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <limits>

#include "asianpath/errors.hpp"
#include "asianpath/montecarlo.hpp"
#include "asianpath/pricers.hpp"
#include "asianpath/propagators.hpp"
#include "oracles.hpp"

using namespace asianpath;

namespace {

ControlDynamics control(double rho, double s0y = 100.0, double barrier = 150.0)
{
    ControlDynamics c;
    c.nu = 0.03;
    c.xi = 0.25;
    c.s0y = s0y;
    c.rho = Correlation(rho);
    c.barrier = barrier;
    return c;
}

// E[max(S0 e^{x} - S0 e^{xbar}, 0)] by quadrature over x and the
// conditional law xbar | x ~ N(x/2, sigma^2 T / 12).
double average_strike_oracle(const AssetDynamics& p, double r)
{
    const double t = p.horizon;
    const double s2 = p.sigma * p.sigma;
    const double mx = (p.mu - 0.5 * s2) * t;
    const double sx = p.sigma * std::sqrt(t);
    const double sc = std::sqrt(s2 * t / 12.0);
    auto outer = [&](double x) {
        const double fx = std::exp(-0.5 * (x - mx) * (x - mx) / (sx * sx)) / (sx * std::sqrt(2 * M_PI));
        // E[max(e^x - e^A, 0)] with A ~ N(x/2, sc^2): Black-type closed form in the inner variable.
        const double m = 0.5 * x;
        const double z = (x - m) / sc;
        const double inner = std::exp(x) * oracle::phi_cdf(z) - std::exp(m + 0.5 * sc * sc) * oracle::phi_cdf(z - sc);
        return fx * inner;
    };
    return std::exp(-r * t) * p.s0 * oracle::composite_gauss(outer, mx - 10 * sx, mx + 10 * sx, 40);
}

// E[max(S0 e^{xbar} - K, 0)] by quadrature over the Gaussian marginal of xbar.
double average_price_oracle(const AssetDynamics& p, double strike, double r)
{
    const double t = p.horizon;
    const double m = 0.5 * (p.mu - 0.5 * p.sigma * p.sigma) * t;
    const double s = p.sigma * std::sqrt(t / 3.0);
    const double k = std::log(strike / p.s0);
    auto f = [&](double a) {
        return (p.s0 * std::exp(a) - strike) * std::exp(-0.5 * (a - m) * (a - m) / (s * s)) / (s * std::sqrt(2 * M_PI));
    };
    return std::exp(-r * t) * oracle::composite_gauss(f, k, std::max(k, m) + 12 * s, 60);
}

}  // namespace

TEST(AverageStrike, MatchesQuadratureOracle)
{
    for (double mu : {-0.05, 0.03, 0.1}) {
        for (double sigma : {0.1, 0.25, 0.6}) {
            for (double t : {0.25, 1.0, 3.0}) {
                const AssetDynamics p{mu, sigma, 100.0, t};
                const double ref = average_strike_oracle(p, 0.04);
                EXPECT_NEAR(price_average_strike_call(p, 0.04).value, ref, 1e-10 * ref) << mu << ' ' << sigma << ' ' << t;
            }
        }
    }
}

TEST(AverageStrike, LimitsAndBreakdown)
{
    const auto zero_t = price_average_strike_call({0.03, 0.25, 100.0, 0.0}, 0.03);
    EXPECT_EQ(zero_t.value, 0.0);
    EXPECT_TRUE(zero_t.has_flag("analytic-limit"));
    const auto zero_sigma = price_average_strike_call({0.03, 0.0, 100.0, 1.0}, 0.03);
    EXPECT_EQ(zero_sigma.value, std::exp(-0.03) * (100.0 * (std::exp(0.03) - std::exp(0.015))));
    EXPECT_NEAR(zero_sigma.value, 1.48881, 1e-5);

    const auto r = price_average_strike_call({0.03, 0.25, 100.0, 1.0}, 0.03);
    const double scale = std::sqrt(3.0 / (4.0 * 0.0625));
    EXPECT_DOUBLE_EQ(r.term("d1"), scale * (0.03 + 0.03125));
    EXPECT_DOUBLE_EQ(r.term("d2"), scale * (0.03 - 0.0625 / 6.0));
    EXPECT_THROW(r.term("nope"), ParameterError);
    EXPECT_THROW(price_average_strike_call({0.03, -0.1, 100.0, 1.0}, 0.03), ParameterError);
    EXPECT_THROW(price_average_strike_call({0.03, 0.2, 100.0, 1.0}, std::nan("")), ParameterError);
}

TEST(AverageStrike, NondecreasingInSigma)
{
    double previous = 0.0;
    for (double sigma = 0.05; sigma <= 0.6 + 1e-12; sigma += 0.05) {
        const double v = price_average_strike_call({0.03, sigma, 100.0, 1.0}, 0.03).value;
        EXPECT_GE(v, previous);
        previous = v;
    }
}

TEST(AveragePrice, MatchesQuadratureOracle)
{
    for (double sigma : {0.1, 0.3}) {
        for (double t : {0.5, 2.0}) {
            for (double strike : {80.0, 100.0, 125.0}) {
                const AssetDynamics p{0.03, sigma, 100.0, t};
                const double ref = average_price_oracle(p, strike, 0.02);
                EXPECT_NEAR(price_average_price_call(p, {OptionKind::AveragePriceCall, strike, 0.02}).value, ref,
                            1e-10 * ref + 1e-13);
            }
        }
    }
}

TEST(AveragePrice, LimitsAndShape)
{
    const AssetDynamics p{0.03, 0.25, 100.0, 1.0};
    const auto m = average_moments(p, 1.0);
    const double forward = std::exp(-0.03) * 100.0 * std::exp(m.mean + 0.5 * m.variance);
    EXPECT_NEAR(price_average_price_call(p, {OptionKind::AveragePriceCall, 1e-12, 0.03}).value, forward, 1e-9);
    const auto zero_sigma = price_average_price_call({0.03, 0.0, 100.0, 1.0}, {OptionKind::AveragePriceCall, 100.0, 0.03});
    EXPECT_EQ(zero_sigma.value, std::exp(-0.03) * std::max(100.0 * std::exp(0.015) - 100.0, 0.0));
    EXPECT_NEAR(zero_sigma.value, 1.46664, 1e-5);
    EXPECT_EQ(price_average_price_call({0.03, 0.2, 100.0, 0.0}, {OptionKind::AveragePriceCall, 90.0, 0.03}).value, 10.0);
    EXPECT_THROW(price_average_price_call(p, {OptionKind::AveragePriceCall, 0.0, 0.03}), ParameterError);
    EXPECT_THROW(price_average_price_call(p, {OptionKind::AveragePriceCall, -5.0, 0.03}), ParameterError);

    // Nonincreasing and convex in K.
    const double h = 1.0;
    for (double k = 60.0; k <= 140.0; k += 5.0) {
        auto v = [&](double kk) { return price_average_price_call(p, {OptionKind::AveragePriceCall, kk, 0.03}).value; };
        EXPECT_LE(v(k + h), v(k));
        EXPECT_GE(v(k + h) - 2 * v(k) + v(k - h), -1e-12);
    }
}

TEST(BarrierPrice, ZeroCorrelationFactorizes)
{
    for (double s0y : {50.0, 100.0, 140.0}) {
        for (double nu : {-0.1, 0.03, 0.2}) {
            const AssetDynamics p{0.03, 0.25, 100.0, 1.0};
            ControlDynamics c = control(0.0, s0y);
            c.nu = nu;
            const OptionSpec spec{OptionKind::BarrierAveragePriceCall, 100.0, 0.03};
            const double survival = oracle::bm_max_survival(c.log_drift(), c.xi, p.horizon, c.log_barrier());
            const double ref = average_price_oracle(p, 100.0, 0.03) * survival;
            const auto r = price_barrier_average_price_call(p, c, spec);
            EXPECT_NEAR(r.value, ref, 1e-9 * ref) << s0y << ' ' << nu;
            EXPECT_TRUE(r.has_flag("amended:d6"));
            EXPECT_FALSE(r.has_flag("approximate"));
        }
    }
}

TEST(BarrierPrice, FarBarrierRecoversAveragePrice)
{
    const AssetDynamics p{0.03, 0.25, 100.0, 1.0};
    const OptionSpec spec{OptionKind::BarrierAveragePriceCall, 100.0, 0.03};
    const double plain = price_average_price_call(p, {OptionKind::AveragePriceCall, 100.0, 0.03}).value;
    for (double rho : {-0.7, 0.0, 0.5, 0.9}) {
        const double v = price_barrier_average_price_call(p, control(rho, 100.0, 1e12), spec).value;
        EXPECT_NEAR(v, plain, 1e-8 * plain) << rho;
    }
}

TEST(BarrierPrice, MonotoneAndBounded)
{
    const AssetDynamics p{0.03, 0.25, 100.0, 1.0};
    const OptionSpec spec{OptionKind::BarrierAveragePriceCall, 100.0, 0.03};
    const double plain = price_average_price_call(p, {OptionKind::AveragePriceCall, 100.0, 0.03}).value;
    double previous = 0.0;
    for (double barrier = 101.0; barrier <= 400.0; barrier += 7.0) {
        const double v = price_barrier_average_price_call(p, control(0.0, 100.0, barrier), spec).value;
        EXPECT_GE(v, previous);
        EXPECT_LE(v, plain);
        EXPECT_GE(v, 0.0);
        previous = v;
    }
}

TEST(BarrierPrice, FlagsAndErrors)
{
    const AssetDynamics p{0.03, 0.25, 100.0, 1.0};
    const OptionSpec spec{OptionKind::BarrierAveragePriceCall, 100.0, 0.03};
    const auto knocked = price_barrier_average_price_call(p, control(0.2, 150.0, 150.0), spec);
    EXPECT_EQ(knocked.value, 0.0);
    EXPECT_TRUE(knocked.has_flag("already-knocked-out"));
    const auto correlated = price_barrier_average_price_call(p, control(0.4), spec);
    EXPECT_TRUE(correlated.has_flag("approximate"));
    for (const char* name : {"d1", "d2", "d3", "d4", "d5", "d6", "d7", "d8", "term_direct_asset", "term_direct_strike",
                             "term_image_asset", "term_image_strike"}) {
        EXPECT_NO_THROW(correlated.term(name)) << name;
    }
    const double sum = correlated.term("term_direct_asset") + correlated.term("term_direct_strike") +
                       correlated.term("term_image_asset") + correlated.term("term_image_strike");
    EXPECT_NEAR(correlated.value, correlated.term("discount") * sum, 1e-12);

    EXPECT_THROW(price_barrier_average_price_call(p, control(1.0), spec), DegenerateCorrelationError);
    EXPECT_THROW(price_barrier_average_price_call(p, control(0.0), {OptionKind::BarrierAveragePriceCall, 0.0, 0.03}),
                 ParameterError);
    EXPECT_THROW(price_closed_form(p, nullptr, spec), ConfigError);
    EXPECT_THROW(price_closed_form(p, nullptr, {OptionKind::AveragePricePut, 100.0, 0.03}), ParameterError);
}

TEST(OptionKindNames, RoundTrip)
{
    for (auto kind : {OptionKind::AverageStrikeCall, OptionKind::AveragePriceCall, OptionKind::BarrierAveragePriceCall,
                      OptionKind::AverageStrikePut, OptionKind::AveragePricePut}) {
        EXPECT_EQ(parse_option_kind(to_string(kind)), kind);
    }
    EXPECT_THROW(parse_option_kind("asian"), ParameterError);
}

// Closed forms against Monte Carlo over a 3x3x3 grid of (sigma, T, K) and
// (sigma, T, B) at rho = 0. The barrier kind is compared with the step-count
// extrapolated estimate, since the closed form monitors continuously.
class ClosedFormVsMc : public ::testing::TestWithParam<std::tuple<double, double, int>> {};

TEST_P(ClosedFormVsMc, WithinThreeStandardErrors)
{
    const auto [sigma, t, level] = GetParam();
    const AssetDynamics p{0.03, sigma, 100.0, t};
    McConfig cfg;
    cfg.n_paths = 20'000;
    cfg.n_steps = 50;
    cfg.seed = 2024;

    const double strike = std::array{90.0, 100.0, 110.0}[level];
    const OptionSpec avg_strike{OptionKind::AverageStrikeCall, 0.0, 0.03};
    const OptionSpec avg_price{OptionKind::AveragePriceCall, strike, 0.03};
    for (const auto& spec : {avg_strike, avg_price}) {
        const auto mc = mc_price(p, std::nullopt, spec, cfg);
        const double cf = price_closed_form(p, nullptr, spec).value;
        EXPECT_LE(std::abs(mc.value - cf), 3.0 * mc.std_error) << to_string(spec.kind) << " cf=" << cf << " mc=" << mc.value;
    }

    const double barrier = std::array{125.0, 150.0, 200.0}[level];
    const ControlDynamics c = control(0.0, 100.0, barrier);
    const OptionSpec barrier_spec{OptionKind::BarrierAveragePriceCall, 100.0, 0.03};
    const auto mc = mc_price_extrapolated(p, c, barrier_spec, cfg);
    const double cf = price_barrier_average_price_call(p, c, barrier_spec).value;
    EXPECT_LE(std::abs(mc.value - cf), 3.0 * mc.std_error) << "barrier cf=" << cf << " mc=" << mc.value;
}

INSTANTIATE_TEST_SUITE_P(Grid, ClosedFormVsMc,
                         ::testing::Combine(::testing::Values(0.15, 0.25, 0.4), ::testing::Values(0.5, 1.0, 2.0),
                                            ::testing::Values(0, 1, 2)));
