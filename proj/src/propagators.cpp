#include "asianpath/propagators.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "asianpath/errors.hpp"

namespace asianpath {

namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

void require_finite(const StatePoint& s, bool need_y)
{
    if (!std::isfinite(s.x) || !std::isfinite(s.xbar)) {
        throw ParameterError("state point coordinates must be finite");
    }
    if (need_y && (!s.y || !std::isfinite(*s.y))) {
        throw ParameterError("state point needs a finite y coordinate");
    }
}

// ln K(x, y, xbar) for the two-process propagator started at the origin.
double log_two_process(const AssetDynamics& p, const ControlDynamics& c, double x, double y, double xbar)
{
    const double t = p.horizon;
    const double sigma = p.sigma;
    const double xi = c.xi;
    const double rho = c.rho.value();
    const double one_minus = (1.0 - rho) * (1.0 + rho);
    const double dx = x - p.log_drift() * t;
    const double dy = y - c.log_drift() * t;
    const double u = xbar - 0.5 * x;

    const double log_prefactor =
        0.5 * std::log(3.0 / (2.0 * std::pow(std::numbers::pi, 3) * t * t * t * std::pow(sigma, 4) * xi * xi * one_minus));
    const double exponent = rho * dx * dy / (sigma * xi * one_minus * t) - dx * dx / (2.0 * sigma * sigma * one_minus * t) -
                            dy * dy / (2.0 * xi * xi * one_minus * t) - 6.0 * u * u / (sigma * sigma * t);
    return log_prefactor + exponent;
}

}  // namespace

void validate_for_density(const AssetDynamics& p)
{
    if (!std::isfinite(p.mu)) {
        throw ParameterError("mu must be finite");
    }
    if (!finite_positive(p.sigma)) {
        throw ParameterError("sigma must be > 0 for density evaluation");
    }
    if (!finite_positive(p.horizon)) {
        throw ParameterError("T must be > 0 for density evaluation");
    }
    if (!finite_positive(p.s0)) {
        throw ParameterError("s0 must be > 0");
    }
}

void validate_for_density(const ControlDynamics& c)
{
    if (!std::isfinite(c.nu)) {
        throw ParameterError("nu must be finite");
    }
    if (!finite_positive(c.xi)) {
        throw ParameterError("xi must be > 0");
    }
    if (!finite_positive(c.s0y)) {
        throw ParameterError("s0y must be > 0");
    }
    if (!finite_positive(c.barrier)) {
        throw ParameterError("barrier must be > 0");
    }
}

void validate_allowing_limits(const AssetDynamics& p)
{
    if (!std::isfinite(p.mu)) {
        throw ParameterError("mu must be finite");
    }
    if (!(std::isfinite(p.sigma) && p.sigma >= 0.0)) {
        throw ParameterError("sigma must be >= 0");
    }
    if (!(std::isfinite(p.horizon) && p.horizon >= 0.0)) {
        throw ParameterError("T must be >= 0");
    }
    if (!finite_positive(p.s0)) {
        throw ParameterError("s0 must be > 0");
    }
}

double joint_density(const AssetDynamics& p, const StatePoint& s)
{
    validate_for_density(p);
    require_finite(s, false);
    const double var = p.sigma * p.sigma * p.horizon;
    const double dx = s.x - p.log_drift() * p.horizon;
    const double u = s.xbar - 0.5 * s.x;
    return std::sqrt(3.0) / (std::numbers::pi * var) * std::exp(-dx * dx / (2.0 * var) - 6.0 * u * u / var);
}

AverageMoments average_moments(const AssetDynamics& p, double t)
{
    validate_allowing_limits(p);
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw ParameterError("average_moments: t must be > 0");
    }
    return {0.5 * p.log_drift() * t, p.sigma * p.sigma * t / 3.0, 0.5 * std::sqrt(3.0)};
}

double two_process_density(const AssetDynamics& p, const ControlDynamics& c, const StatePoint& s)
{
    validate_for_density(p);
    validate_for_density(c);
    c.rho.require_nondegenerate("two_process_density");
    require_finite(s, true);
    return std::exp(log_two_process(p, c, s.x, *s.y, s.xbar));
}

double image_log_weight(const AssetDynamics& p, const ControlDynamics& c)
{
    const double rho = c.rho.value();
    const double y_b = c.log_barrier();
    return 2.0 * y_b / (c.xi * (4.0 - 3.0 * rho * rho)) *
           (4.0 / c.xi * c.log_drift() - 3.0 * rho / p.sigma * p.log_drift());
}

MirrorSource mirror_source(const AssetDynamics& p, const ControlDynamics& c, const StatePoint& s)
{
    const double rho = c.rho.value();
    const double y_b = c.log_barrier();
    const double x_s = 2.0 * y_b / c.xi * rho * p.sigma / (4.0 - 3.0 * rho * rho);
    const double shift = x_s - s.x;
    const double a = shift * shift;
    const double b = 4.0 * s.xbar * (s.xbar - s.x);
    double disc = a + b;
    if (disc < 0.0) {
        // Cancellation of a + b can leave a rounding-level negative residue.
        const double scale = a + std::abs(b);
        if (disc < -64.0 * std::numeric_limits<double>::epsilon() * scale) {
            std::ostringstream msg;
            msg << "mirror average undefined: negative discriminant " << disc << " at (x, xbar) = (" << s.x << ", "
                << s.xbar << ")";
            throw DomainError(msg.str());
        }
        disc = 0.0;
    }
    return {x_s, 2.0 * y_b, 0.5 * (-shift + std::sqrt(disc))};
}

double barrier_density(const AssetDynamics& p, const ControlDynamics& c, const StatePoint& s)
{
    validate_for_density(p);
    validate_for_density(c);
    c.rho.require_nondegenerate("barrier_density");
    require_finite(s, true);
    const double y_b = c.log_barrier();
    if (!(y_b > 0.0)) {
        throw DomainError("barrier_density: barrier must lie above the control spot (B > s0y)");
    }
    if (*s.y > y_b) {
        return 0.0;
    }
    const MirrorSource src = mirror_source(p, c, s);
    const double direct = std::exp(log_two_process(p, c, s.x, *s.y, s.xbar));
    const double image =
        std::exp(image_log_weight(p, c) + log_two_process(p, c, s.x - src.x, *s.y - src.y, src.xbar));
    return direct - image;
}

}  // namespace asianpath
