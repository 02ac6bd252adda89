#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asianpath/dynamics.hpp"

namespace asianpath {

enum class OptionKind {
    AverageStrikeCall,
    AveragePriceCall,
    BarrierAveragePriceCall,
    // Monte Carlo only; no closed form.
    AverageStrikePut,
    AveragePricePut,
};

std::string_view to_string(OptionKind kind) noexcept;
/// Accepts the CLI spellings: avg-strike-call, avg-price-call, barrier-avg-price-call,
/// avg-strike-put, avg-price-put. Throws ParameterError otherwise.
OptionKind parse_option_kind(std::string_view text);
bool has_closed_form(OptionKind kind) noexcept;
bool needs_control(OptionKind kind) noexcept;

struct OptionSpec {
    OptionKind kind = OptionKind::AverageStrikeCall;
    double strike = 0.0;  // unused by average-strike kinds
    double rate = 0.0;
};

/// Closed-form price with the intermediate quantities that produced it.
struct PriceResult {
    double value = 0.0;
    /// Insertion-ordered (name, value) pairs: d-values, term contributions, ...
    std::vector<std::pair<std::string, double>> breakdown;
    /// Markers such as "analytic-limit" or "already-knocked-out".
    std::vector<std::string> flags;

    double term(std::string_view name) const;
    bool has_flag(std::string_view flag) const noexcept;
};

/// Average-strike geometric Asian call, payoff max(S_T - Sbar_T, 0):
///
///   V = S0 e^{-rT} ( e^{mu T} Phi(d1) - e^{(mu - sigma^2/6) T/2} Phi(d2) ),
///   d1 = sqrt(3T / 4sigma^2) (mu + sigma^2/2),  d2 = sqrt(3T / 4sigma^2) (mu - sigma^2/6).
///
/// sigma = 0 and T = 0 return the deterministic payoff (flag "analytic-limit").
PriceResult price_average_strike_call(const AssetDynamics& p, double rate);

/// Average-price geometric Asian call, payoff max(Sbar_T - K, 0), from the
/// Gaussian marginal xbar_T ~ N(m, v), m = (mu - sigma^2/2) T/2, v = sigma^2 T/3:
///
///   V = e^{-rT} [ S0 e^{m + v/2} Phi((m - k + v)/sqrt v) - K Phi((m - k)/sqrt v) ],  k = ln(K/S0).
PriceResult price_average_price_call(const AssetDynamics& p, const OptionSpec& spec);

/// Average-price call that is knocked out when the control process reaches
/// B from below, priced with the four-term image formula. Exact at rho = 0,
/// an approximation for rho != 0.
///
/// The shift inside d6 is sigma y_S / T; with x_S in that slot the formula
/// no longer reduces to the rho = 0 product form (flag "amended:d6").
/// B <= S0y returns value 0 with flag "already-knocked-out".
PriceResult price_barrier_average_price_call(const AssetDynamics& p, const ControlDynamics& c, const OptionSpec& spec);

/// Dispatches on spec.kind; throws ParameterError for kinds without a closed form.
PriceResult price_closed_form(const AssetDynamics& p, const ControlDynamics* c, const OptionSpec& spec);

}  // namespace asianpath
