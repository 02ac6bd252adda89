#pragma once

#include "asianpath/dynamics.hpp"

namespace asianpath {

/// Joint density of the terminal logreturn and its time average,
///
///   K(x, xbar) = sqrt(3) / (pi sigma^2 T)
///              * exp{ -[x - (mu - sigma^2/2) T]^2 / (2 sigma^2 T)
///                     - 6 (xbar - x/2)^2 / (sigma^2 T) }.
///
/// s.y is ignored.
double joint_density(const AssetDynamics& p, const StatePoint& s);

struct AverageMoments {
    double mean;
    double variance;
    double corr_with_x;
};

/// Gaussian moments of xbar_t: ((mu - sigma^2/2) t / 2, sigma^2 t / 3, sqrt(3)/2).
AverageMoments average_moments(const AssetDynamics& p, double t);

/// Density of (x_T, y_T, xbar_T) for the correlated pair (x, y); requires s.y and |rho| < 1.
double two_process_density(const AssetDynamics& p, const ControlDynamics& c, const StatePoint& s);

/// Source point of the mirror propagator. x_S and y_S are fixed by the
/// dynamics; xbar_S is the non-negative root of
///   xbar_S (xbar_S + x_S - x) = xbar (xbar - x),
/// so it moves with the terminal point.
struct MirrorSource {
    double x;
    double y;
    double xbar;
};

/// Throws DomainError when (x_S - x)^2 + 4 xbar (xbar - x) < 0.
MirrorSource mirror_source(const AssetDynamics& p, const ControlDynamics& c, const StatePoint& s);

/// ln C of the image term:
///   2 y_B / (xi (4 - 3 rho^2)) * [ (4/xi)(nu - xi^2/2) - 3 (rho/sigma)(mu - sigma^2/2) ].
double image_log_weight(const AssetDynamics& p, const ControlDynamics& c);

/// Up-and-out barrier propagator built with a single image:
///
///   K_B(x, y, xbar) = K(x, y, xbar) - C K(x - x_S, y - y_S, xbar_S).
///
/// Returns 0 strictly above the barrier. At y = y_B the two terms cancel
/// (up to rounding). Not guaranteed non-negative for rho != 0.
double barrier_density(const AssetDynamics& p, const ControlDynamics& c, const StatePoint& s);

}  // namespace asianpath
