#include "asianpath/specialfn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "asianpath/errors.hpp"

namespace asianpath {

namespace {

struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
GaussLegendre gauss_legendre(int n)
{
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            derivative = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / derivative;
            x -= step;
            if (std::abs(step) < 1e-17) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussLegendre& rule_for(double abs_chi)
{
    static const GaussLegendre six = gauss_legendre(6);
    static const GaussLegendre twelve = gauss_legendre(12);
    static const GaussLegendre twenty = gauss_legendre(20);
    if (abs_chi < 0.3) {
        return six;
    }
    if (abs_chi < 0.75) {
        return twelve;
    }
    return twenty;
}

// P(X > h, Y > k) for |chi| < 1.
double upper_orthant(double h, double k, double chi)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const GaussLegendre& rule = rule_for(std::abs(chi));
    double hk = h * k;
    double sum = 0.0;

    if (std::abs(chi) < 0.925) {
        const double hs = 0.5 * (h * h + k * k);
        const double asr = std::asin(chi);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double sn = std::sin(0.5 * asr * (rule.nodes[i] + 1.0));
            sum += rule.weights[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
        }
        return sum * asr / (2.0 * two_pi) + std_normal_cdf(-h) * std_normal_cdf(-k);
    }

    if (chi < 0.0) {
        k = -k;
        hk = -hk;
    }
    const double as = (1.0 - chi) * (1.0 + chi);
    double a = std::sqrt(as);
    const double bs = (h - k) * (h - k);
    const double c = (4.0 - hk) / 8.0;
    const double d = (12.0 - hk) / 16.0;
    sum = a * std::exp(-0.5 * (bs / as + hk)) *
          (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
    if (hk > -160.0) {
        const double b = std::sqrt(bs);
        sum -= std::exp(-0.5 * hk) * std::sqrt(two_pi) * std_normal_cdf(-b / a) * b *
               (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
    }
    a *= 0.5;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = a * (rule.nodes[i] + 1.0);
        const double xs = t * t;
        const double rs = std::sqrt(1.0 - xs);
        const double tail = std::exp(-0.5 * (bs / xs + hk));
        if (tail == 0.0) {
            continue;
        }
        sum += a * rule.weights[i] * tail *
               (std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs - (1.0 + c * xs * (1.0 + d * xs)));
    }
    sum = -sum / two_pi;

    if (chi > 0.0) {
        return sum + std_normal_cdf(-std::max(h, k));
    }
    sum = -sum;
    if (k > h) {
        sum += (h < 0.0) ? std_normal_cdf(k) - std_normal_cdf(h) : std_normal_cdf(-h) - std_normal_cdf(-k);
    }
    return sum;
}

}  // namespace

Correlation::Correlation(double rho) : rho_(rho)
{
    if (!(rho >= -1.0 && rho <= 1.0)) {
        throw ParameterError("correlation must lie in [-1, 1], got " + std::to_string(rho));
    }
}

void Correlation::require_nondegenerate(const char* where) const
{
    if (degenerate()) {
        throw DegenerateCorrelationError(std::string(where) + ": |rho| = 1 is degenerate (1 - rho^2 = 0)");
    }
}

double erf(double x) noexcept { return std::erf(x); }

double erfc(double x) noexcept { return std::erfc(x); }

double std_normal_pdf(double x) noexcept
{
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double std_normal_cdf(double x) noexcept
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double bivariate_normal_cdf(double a, double b, double chi)
{
    if (std::isnan(a) || std::isnan(b) || !(chi >= -1.0 && chi <= 1.0)) {
        throw ParameterError("bivariate_normal_cdf: arguments must be numbers with chi in [-1, 1]");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (a == -inf || b == -inf) {
        return 0.0;
    }
    if (a == inf) {
        return std_normal_cdf(b);
    }
    if (b == inf) {
        return std_normal_cdf(a);
    }
    if (chi == 1.0) {
        return std_normal_cdf(std::min(a, b));
    }
    if (chi == -1.0) {
        return std::max(0.0, std_normal_cdf(a) + std_normal_cdf(b) - 1.0);
    }
    return std::clamp(upper_orthant(-a, -b, chi), 0.0, 1.0);
}

std::pair<double, double> sample_correlated_pair(NormalStream& stream, Correlation rho) noexcept
{
    const double z1 = stream.next();
    const double z_perp = stream.next();
    const double r = rho.value();
    return {z1, r * z1 + std::sqrt((1.0 - r) * (1.0 + r)) * z_perp};
}

}  // namespace asianpath
