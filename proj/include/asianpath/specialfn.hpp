#pragma once

#include <utility>

#include "asianpath/rng.hpp"

namespace asianpath {

/// Instantaneous correlation between two Wiener drivers, <dW dZ> = rho dt.
///
/// Construction accepts the closed interval [-1, 1]; the endpoints are kept
/// for operations with analytic limits and rejected by everything that
/// divides by 1 - rho^2 (see require_nondegenerate()).
class Correlation {
public:
    constexpr Correlation() = default;
    explicit Correlation(double rho);

    constexpr double value() const noexcept { return rho_; }
    constexpr bool degenerate() const noexcept { return rho_ == 1.0 || rho_ == -1.0; }

    /// Throws DegenerateCorrelationError when |rho| = 1.
    void require_nondegenerate(const char* where) const;

private:
    double rho_ = 0.0;
};

double erf(double x) noexcept;
double erfc(double x) noexcept;

double std_normal_pdf(double x) noexcept;

/// Phi(x) = (1 + erf(x / sqrt 2)) / 2, evaluated through erfc to keep the
/// lower tail accurate. Accepts +-infinity.
double std_normal_cdf(double x) noexcept;

/// N[a, b; chi] = P(X < a, Y < b) for standard normals with correlation chi.
///
/// Gauss-Legendre integration of the Plackett/Drezner-Wesolowsky
/// representation with Genz's asymptotic expansion for |chi| >= 0.925;
/// double-precision accurate. chi = +-1 use the degenerate closed forms.
double bivariate_normal_cdf(double a, double b, double chi);

/// Draws (z1, z2) with z2 = rho z1 + sqrt(1 - rho^2) z_perp from two
/// consecutive normals of the stream. rho = +-1 is allowed (z2 = +-z1).
std::pair<double, double> sample_correlated_pair(NormalStream& stream, Correlation rho) noexcept;

}  // namespace asianpath
