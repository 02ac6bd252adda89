#include "asianpath/pricers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "asianpath/errors.hpp"
#include "asianpath/propagators.hpp"

namespace asianpath {

namespace {

void require_finite_rate(double rate)
{
    if (!std::isfinite(rate)) {
        throw ParameterError("rate r must be finite");
    }
}

void require_positive_strike(double strike)
{
    if (!(std::isfinite(strike) && strike > 0.0)) {
        throw ParameterError("strike K must be > 0");
    }
}

// c * N, evaluated as exp(log c + log N) so that a huge image weight
// multiplying a vanishing probability stays finite.
double scaled_probability(double log_scale, double probability)
{
    if (probability <= 0.0) {
        return 0.0;
    }
    return std::exp(log_scale + std::log(probability));
}

}  // namespace

std::string_view to_string(OptionKind kind) noexcept
{
    switch (kind) {
    case OptionKind::AverageStrikeCall: return "avg-strike-call";
    case OptionKind::AveragePriceCall: return "avg-price-call";
    case OptionKind::BarrierAveragePriceCall: return "barrier-avg-price-call";
    case OptionKind::AverageStrikePut: return "avg-strike-put";
    case OptionKind::AveragePricePut: return "avg-price-put";
    }
    return "unknown";
}

OptionKind parse_option_kind(std::string_view text)
{
    for (auto kind : {OptionKind::AverageStrikeCall, OptionKind::AveragePriceCall, OptionKind::BarrierAveragePriceCall,
                      OptionKind::AverageStrikePut, OptionKind::AveragePricePut}) {
        if (text == to_string(kind)) {
            return kind;
        }
    }
    throw ParameterError("unknown option kind '" + std::string(text) + "'");
}

bool has_closed_form(OptionKind kind) noexcept
{
    return kind == OptionKind::AverageStrikeCall || kind == OptionKind::AveragePriceCall ||
           kind == OptionKind::BarrierAveragePriceCall;
}

bool needs_control(OptionKind kind) noexcept { return kind == OptionKind::BarrierAveragePriceCall; }

double PriceResult::term(std::string_view name) const
{
    for (const auto& [key, value] : breakdown) {
        if (key == name) {
            return value;
        }
    }
    throw ParameterError("no breakdown term named '" + std::string(name) + "'");
}

bool PriceResult::has_flag(std::string_view flag) const noexcept
{
    return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

PriceResult price_average_strike_call(const AssetDynamics& p, double rate)
{
    validate_allowing_limits(p);
    require_finite_rate(rate);
    const double t = p.horizon;
    const double mu = p.mu;
    PriceResult out;

    if (t == 0.0) {
        out.flags.emplace_back("analytic-limit");
        return out;
    }
    if (p.sigma == 0.0) {
        // Deterministic path: S_T = S0 e^{mu T}, Sbar_T = S0 e^{mu T/2}.
        out.value = std::exp(-rate * t) * (p.s0 * std::max(std::exp(mu * t) - std::exp(0.5 * mu * t), 0.0));
        out.flags.emplace_back("analytic-limit");
        return out;
    }

    const double s2 = p.sigma * p.sigma;
    const double scale = std::sqrt(3.0 * t / (4.0 * s2));
    const double d1 = scale * (mu + 0.5 * s2);
    const double d2 = scale * (mu - s2 / 6.0);
    const double growth_terminal = std::exp(mu * t);
    const double growth_average = std::exp(0.5 * (mu - s2 / 6.0) * t);
    const double discount = std::exp(-rate * t);

    out.value = p.s0 * discount * (growth_terminal * std_normal_cdf(d1) - growth_average * std_normal_cdf(d2));
    out.breakdown = {{"d1", d1},
                     {"d2", d2},
                     {"growth_terminal", growth_terminal},
                     {"growth_average", growth_average},
                     {"discount", discount}};
    return out;
}

PriceResult price_average_price_call(const AssetDynamics& p, const OptionSpec& spec)
{
    validate_allowing_limits(p);
    require_finite_rate(spec.rate);
    require_positive_strike(spec.strike);
    const double t = p.horizon;
    const double strike = spec.strike;
    PriceResult out;

    if (t == 0.0) {
        out.value = std::max(p.s0 - strike, 0.0);
        out.flags.emplace_back("analytic-limit");
        return out;
    }
    if (p.sigma == 0.0) {
        out.value = std::exp(-spec.rate * t) * std::max(p.s0 * std::exp(0.5 * p.mu * t) - strike, 0.0);
        out.flags.emplace_back("analytic-limit");
        return out;
    }

    const AverageMoments mom = average_moments(p, t);
    const double sd = std::sqrt(mom.variance);
    const double k = std::log(strike / p.s0);
    const double d1 = (mom.mean - k + mom.variance) / sd;
    const double d2 = (mom.mean - k) / sd;
    const double discount = std::exp(-spec.rate * t);
    const double forward = p.s0 * std::exp(mom.mean + 0.5 * mom.variance);

    out.value = discount * (forward * std_normal_cdf(d1) - strike * std_normal_cdf(d2));
    out.breakdown = {{"d1", d1},
                     {"d2", d2},
                     {"average_mean", mom.mean},
                     {"average_variance", mom.variance},
                     {"average_forward", forward},
                     {"discount", discount}};
    return out;
}

PriceResult price_barrier_average_price_call(const AssetDynamics& p, const ControlDynamics& c, const OptionSpec& spec)
{
    validate_for_density(p);
    validate_for_density(c);
    require_finite_rate(spec.rate);
    require_positive_strike(spec.strike);
    c.rho.require_nondegenerate("price_barrier_average_price_call");

    PriceResult out;
    const double y_b = c.log_barrier();
    if (!(y_b > 0.0)) {
        out.flags.emplace_back("already-knocked-out");
        return out;
    }

    const double t = p.horizon;
    const double mu = p.mu;
    const double sigma = p.sigma;
    const double s2 = sigma * sigma;
    const double xi = c.xi;
    const double rho = c.rho.value();
    const double strike = spec.strike;
    const double ax = p.log_drift();
    const double ay = c.log_drift();

    const double x_s = 2.0 * y_b / xi * rho * sigma / (4.0 - 3.0 * rho * rho);
    const double y_s = 2.0 * y_b;
    const double k = std::log(strike / p.s0);
    const double sd_avg = std::sqrt(s2 * t / 3.0);
    const double sd_y = std::sqrt(xi * xi * t);
    const double chi = -std::sqrt(0.75) * rho;
    const double log_weight = image_log_weight(p, c);

    const double d1 = -(k - 0.5 * t * (mu + s2 / 6.0)) / sd_avg;
    const double d2 = (y_b - t * (ay + 0.5 * sigma * xi * rho)) / sd_y;
    const double d3 = -(k - 0.5 * t * ax) / sd_avg;
    const double d4 = (y_b - t * ay) / sd_y;
    const double d5 = -(k - t * (2.0 * x_s / t + 0.5 * (mu + s2 / 6.0))) / sd_avg;
    const double d6 =
        (y_b - t / sigma * (3.0 * xi * rho * x_s / t + sigma * y_s / t + sigma * (ay + 0.5 * sigma * xi * rho))) / sd_y;
    const double d7 = -(k - t * (2.0 * x_s / t + 0.5 * ax)) / sd_avg;
    const double d8 = (y_b - t / (2.0 * sigma) * ((6.0 * rho * x_s * xi + 2.0 * sigma * y_s) / t + 2.0 * sigma * ay)) / sd_y;

    const double log_asset_image =
        3.0 * t / s2 * (x_s / t + s2 / 6.0) * (2.0 * x_s / t + (mu - s2 / 6.0)) + log_weight;
    const double log_strike_image = 3.0 / s2 * x_s * (2.0 * x_s / t + ax) + log_weight;

    const double direct_asset = p.s0 * std::exp(0.5 * t * (mu - s2 / 6.0)) * bivariate_normal_cdf(d1, d2, chi);
    const double direct_strike = -strike * bivariate_normal_cdf(d3, d4, chi);
    const double image_asset = -p.s0 * scaled_probability(log_asset_image, bivariate_normal_cdf(d5, d6, chi));
    const double image_strike = strike * scaled_probability(log_strike_image, bivariate_normal_cdf(d7, d8, chi));
    const double discount = std::exp(-spec.rate * t);

    out.value = discount * (direct_asset + direct_strike + image_asset + image_strike);
    out.breakdown = {{"d1", d1},
                     {"d2", d2},
                     {"d3", d3},
                     {"d4", d4},
                     {"d5", d5},
                     {"d6", d6},
                     {"d7", d7},
                     {"d8", d8},
                     {"chi", chi},
                     {"x_s", x_s},
                     {"y_s", y_s},
                     {"log_barrier", y_b},
                     {"image_log_weight", log_weight},
                     {"term_direct_asset", direct_asset},
                     {"term_direct_strike", direct_strike},
                     {"term_image_asset", image_asset},
                     {"term_image_strike", image_strike},
                     {"discount", discount}};
    out.flags.emplace_back("amended:d6");
    if (rho != 0.0) {
        out.flags.emplace_back("approximate");
    }
    if (out.value < 0.0) {
        out.flags.emplace_back("negative-value");
    }
    return out;
}

PriceResult price_closed_form(const AssetDynamics& p, const ControlDynamics* c, const OptionSpec& spec)
{
    switch (spec.kind) {
    case OptionKind::AverageStrikeCall: return price_average_strike_call(p, spec.rate);
    case OptionKind::AveragePriceCall: return price_average_price_call(p, spec);
    case OptionKind::BarrierAveragePriceCall:
        if (c == nullptr) {
            throw ConfigError("barrier-avg-price-call needs control-process dynamics");
        }
        return price_barrier_average_price_call(p, *c, spec);
    default:
        throw ParameterError("no closed form for " + std::string(to_string(spec.kind)) + "; use the Monte Carlo engine");
    }
}

}  // namespace asianpath
