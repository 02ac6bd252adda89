#pragma once

#include <cmath>
#include <optional>

#include "asianpath/specialfn.hpp"

namespace asianpath {

/// Black-Scholes dynamics of the priced asset: dx = (mu - sigma^2/2) dt + sigma dW,
/// with x_t = ln(S_t / S_0). Rates per year, volatility per sqrt-year.
struct AssetDynamics {
    double mu = 0.0;
    double sigma = 0.0;
    double s0 = 1.0;
    double horizon = 1.0;

    double log_drift() const noexcept { return mu - 0.5 * sigma * sigma; }
};

/// Control process carrying an up-and-out barrier:
/// dy = (nu - xi^2/2) dt + xi dZ, <dW dZ> = rho dt, y_t = ln(S_t^y / S_0^y).
struct ControlDynamics {
    double nu = 0.0;
    double xi = 0.0;
    double s0y = 1.0;
    Correlation rho{};
    double barrier = 2.0;

    double log_drift() const noexcept { return nu - 0.5 * xi * xi; }
    /// y_B = ln(B / S0y).
    double log_barrier() const noexcept { return std::log(barrier / s0y); }
};

/// Terminal state (x_T, xbar_T[, y_T]) in logreturn coordinates.
struct StatePoint {
    double x = 0.0;
    double xbar = 0.0;
    std::optional<double> y{};
};

/// Strict checks used by the densities: sigma > 0, T > 0, s0 > 0.
void validate_for_density(const AssetDynamics& p);
void validate_for_density(const ControlDynamics& c);

/// Pricer/simulator checks: sigma >= 0, T >= 0, s0 > 0, all finite.
void validate_allowing_limits(const AssetDynamics& p);

}  // namespace asianpath
