#include "asianpath/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "asianpath/errors.hpp"
#include "asianpath/propagators.hpp"
#include "asianpath/rng.hpp"

namespace asianpath {

namespace {

constexpr std::uint64_t kBlockPaths = 1024;  // even, so antithetic pairs never straddle blocks
constexpr std::uint32_t kApproxLane = 1;

struct Welford {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double v) noexcept
    {
        ++n;
        const double delta = v - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (v - mean);
    }

    void merge(const Welford& other) noexcept
    {
        if (other.n == 0) {
            return;
        }
        if (n == 0) {
            *this = other;
            return;
        }
        const double total = static_cast<double>(n + other.n);
        const double delta = other.mean - mean;
        mean += delta * static_cast<double>(other.n) / total;
        m2 += other.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(other.n) / total;
        n += other.n;
    }
};

void validate_control_for_simulation(const ControlDynamics& c)
{
    if (!std::isfinite(c.nu) || !(std::isfinite(c.xi) && c.xi >= 0.0)) {
        throw ParameterError("control dynamics need finite nu and xi >= 0");
    }
    if (!(std::isfinite(c.s0y) && c.s0y > 0.0) || !(c.barrier > 0.0)) {
        throw ParameterError("control dynamics need s0y > 0 and barrier > 0");
    }
}

// Runs fn(block) for every block, spreading contiguous block ranges (one per
// chunk) over the worker threads. Output order is the block order.
template <typename Result, typename Fn>
std::vector<Result> run_blocks(std::uint64_t n_paths, std::uint64_t n_chunks, Fn fn)
{
    const std::uint64_t n_blocks = (n_paths + kBlockPaths - 1) / kBlockPaths;
    std::vector<Result> results(n_blocks);
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(n_chunks, n_blocks));
    const unsigned workers = std::min<std::uint64_t>(worker_count(chunks), chunks);

    auto run_chunk = [&](std::uint64_t chunk) {
        const std::uint64_t first = chunk * n_blocks / chunks;
        const std::uint64_t last = (chunk + 1) * n_blocks / chunks;
        for (std::uint64_t b = first; b < last; ++b) {
            const std::uint64_t begin = b * kBlockPaths;
            const std::uint64_t end = std::min(n_paths, begin + kBlockPaths);
            results[b] = fn(begin, end);
        }
    };

    if (workers <= 1) {
        for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
            run_chunk(chunk);
        }
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t chunk = w; chunk < chunks; chunk += workers) {
                run_chunk(chunk);
            }
        });
    }
    pool.clear();
    return results;
}

double payoff(OptionKind kind, double s0, double strike, const PathRecord& r) noexcept
{
    switch (kind) {
    case OptionKind::AverageStrikeCall: return s0 * std::max(std::exp(r.x_terminal) - std::exp(r.x_average), 0.0);
    case OptionKind::AverageStrikePut: return s0 * std::max(std::exp(r.x_average) - std::exp(r.x_terminal), 0.0);
    case OptionKind::AveragePriceCall: return std::max(s0 * std::exp(r.x_average) - strike, 0.0);
    case OptionKind::AveragePricePut: return std::max(strike - s0 * std::exp(r.x_average), 0.0);
    case OptionKind::BarrierAveragePriceCall:
        return r.knocked_out ? 0.0 : std::max(s0 * std::exp(r.x_average) - strike, 0.0);
    }
    return 0.0;
}

}  // namespace

unsigned worker_count(std::uint64_t n_chunks)
{
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ASIANPATH_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && value >= 1) {
            cap = static_cast<unsigned>(value);
        }
    }
    return static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(cap, n_chunks)));
}

McConfig normalize_config(const McConfig& cfg, std::vector<std::string>& warnings)
{
    if (cfg.n_paths < 1) {
        throw ConfigError("n_paths must be >= 1");
    }
    if (cfg.n_steps < 1) {
        throw ConfigError("n_steps must be >= 1");
    }
    if (cfg.n_chunks < 1) {
        throw ConfigError("n_chunks must be >= 1");
    }
    McConfig out = cfg;
    if (out.antithetic && out.n_paths % 2 != 0) {
        ++out.n_paths;
        warnings.push_back("n_paths rounded up to " + std::to_string(out.n_paths) + " for antithetic pairing");
    }
    if (out.n_paths % out.n_chunks != 0) {
        std::uint64_t step = out.n_chunks;
        if (out.antithetic && step % 2 != 0) {
            step *= 2;
        }
        out.n_paths = (out.n_paths + step - 1) / step * step;
        warnings.push_back("n_paths rounded up to " + std::to_string(out.n_paths) + " to divide evenly into " +
                           std::to_string(out.n_chunks) + " chunks");
    }
    return out;
}

PathSimulator::PathSimulator(const AssetDynamics& p, const std::optional<ControlDynamics>& c, const McConfig& cfg)
    : asset_(p), control_(c), cfg_(cfg)
{
    validate_allowing_limits(p);
    if (control_) {
        validate_control_for_simulation(*control_);
    }
    if (cfg.n_steps < 1) {
        throw ConfigError("n_steps must be >= 1");
    }
    dt_ = p.horizon / static_cast<double>(cfg.n_steps);
    sqrt_dt_ = std::sqrt(dt_);
    log_barrier_ = control_ ? control_->log_barrier() : 0.0;
}

PathRecord PathSimulator::simulate(std::uint64_t index, bool stop_at_knockout) const
{
    const std::uint64_t stream_id = cfg_.antithetic ? index / 2 : index;
    const double sign = (cfg_.antithetic && (index & 1u)) ? -1.0 : 1.0;
    NormalStream normals(cfg_.seed, stream_id);

    const std::uint64_t n = cfg_.n_steps;
    const double t = asset_.horizon;
    const double ax = asset_.log_drift();
    const double vol_x = asset_.sigma * sqrt_dt_;

    // Brownian sums in units of sqrt(dt); the drift part of the average is
    // exactly ax T / 2 on the trapezoid grid, so it is added in closed form.
    double w = 0.0;
    double w_inner_sum = 0.0;
    PathRecord out;

    if (!control_) {
        for (std::uint64_t k = 1; k < n; ++k) {
            w += sign * normals.next();
            w_inner_sum += w;
        }
        w += sign * normals.next();
    } else {
        const double rho = control_->rho.value();
        const double rho_perp = std::sqrt((1.0 - rho) * (1.0 + rho));
        const double ay_dt = control_->log_drift() * dt_;
        const double vol_y = control_->xi * sqrt_dt_;
        double v = 0.0;
        double y_max = 0.0;
        bool knocked = 0.0 >= log_barrier_;
        for (std::uint64_t k = 1; k <= n; ++k) {
            const double z1 = sign * normals.next();
            const double z_perp = sign * normals.next();
            w += z1;
            v += rho * z1 + rho_perp * z_perp;
            if (k < n) {
                w_inner_sum += w;
            }
            const double y = ay_dt * static_cast<double>(k) + vol_y * v;
            y_max = std::max(y_max, y);
            if (y >= log_barrier_) {
                knocked = true;
                if (stop_at_knockout) {
                    break;
                }
            }
        }
        out.y_max = y_max;
        out.knocked_out = knocked;
        if (knocked && stop_at_knockout) {
            return out;
        }
    }

    out.x_terminal = ax * t + vol_x * w;
    out.x_average = 0.5 * ax * t + vol_x * (w_inner_sum + 0.5 * w) / static_cast<double>(n);
    return out;
}

double PathSimulator::approximate_average(std::uint64_t index, const PathRecord& record) const
{
    if (!(asset_.sigma > 0.0 && asset_.horizon > 0.0)) {
        throw ParameterError("approximate average needs sigma > 0 and T > 0");
    }
    const std::uint64_t stream_id = cfg_.antithetic ? index / 2 : index;
    const double sign = (cfg_.antithetic && (index & 1u)) ? -1.0 : 1.0;
    NormalStream extra(cfg_.seed, stream_id, kApproxLane);
    const double t = asset_.horizon;
    const double sd_x = asset_.sigma * std::sqrt(t);
    const double z_x = (record.x_terminal - asset_.log_drift() * t) / sd_x;
    const double z_perp = sign * extra.next();
    const AverageMoments mom = average_moments(asset_, t);
    return mom.mean + std::sqrt(mom.variance) * (mom.corr_with_x * z_x + 0.5 * z_perp);
}

std::vector<PathRecord> simulate_paths(const AssetDynamics& p, const std::optional<ControlDynamics>& c,
                                       const McConfig& cfg)
{
    std::vector<std::string> warnings;
    const McConfig norm = normalize_config(cfg, warnings);
    const PathSimulator sim(p, c, norm);
    std::vector<PathRecord> out(norm.n_paths);
    run_blocks<char>(norm.n_paths, norm.n_chunks, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            out[i] = sim.simulate(i);
        }
        return char{};
    });
    return out;
}

PriceEstimate mc_price(const AssetDynamics& p, const std::optional<ControlDynamics>& c, const OptionSpec& spec,
                       const McConfig& cfg)
{
    PriceEstimate est;
    const McConfig norm = normalize_config(cfg, est.warnings);
    if (!std::isfinite(spec.rate)) {
        throw ParameterError("rate r must be finite");
    }
    const bool barrier = needs_control(spec.kind);
    if (barrier && !c) {
        throw ConfigError(std::string(to_string(spec.kind)) + " needs control-process dynamics");
    }
    const bool uses_strike = spec.kind == OptionKind::AveragePriceCall || spec.kind == OptionKind::AveragePricePut ||
                             spec.kind == OptionKind::BarrierAveragePriceCall;
    if (uses_strike && !(std::isfinite(spec.strike) && spec.strike > 0.0)) {
        throw ParameterError("strike K must be > 0");
    }

    const PathSimulator sim(p, barrier ? c : std::nullopt, norm);
    struct BlockSummary {
        Welford payoff;
        std::uint64_t knocked = 0;
    };
    const auto blocks = run_blocks<BlockSummary>(norm.n_paths, norm.n_chunks, [&](std::uint64_t begin, std::uint64_t end) {
        BlockSummary s;
        if (norm.antithetic) {
            for (std::uint64_t i = begin; i < end; i += 2) {
                const PathRecord a = sim.simulate(i, barrier);
                const PathRecord b = sim.simulate(i + 1, barrier);
                s.knocked += static_cast<std::uint64_t>(a.knocked_out) + static_cast<std::uint64_t>(b.knocked_out);
                s.payoff.add(0.5 * (payoff(spec.kind, p.s0, spec.strike, a) + payoff(spec.kind, p.s0, spec.strike, b)));
            }
        } else {
            for (std::uint64_t i = begin; i < end; ++i) {
                const PathRecord r = sim.simulate(i, barrier);
                s.knocked += static_cast<std::uint64_t>(r.knocked_out);
                s.payoff.add(payoff(spec.kind, p.s0, spec.strike, r));
            }
        }
        return s;
    });

    Welford total;
    std::uint64_t knocked = 0;
    for (const auto& b : blocks) {
        total.merge(b.payoff);
        knocked += b.knocked;
    }
    const double discount = std::exp(-spec.rate * p.horizon);
    est.value = discount * total.mean;
    est.n_effective = total.n;
    if (total.n > 1) {
        const double variance = total.m2 / static_cast<double>(total.n - 1);
        est.std_error = discount * std::sqrt(variance / static_cast<double>(total.n));
    } else {
        est.warnings.push_back("standard error undefined for a single sample");
    }
    if (barrier) {
        est.knockout_fraction = static_cast<double>(knocked) / static_cast<double>(norm.n_paths);
    }
    return est;
}

ExtrapolatedEstimate mc_price_extrapolated(const AssetDynamics& p, const std::optional<ControlDynamics>& c,
                                           const OptionSpec& spec, const McConfig& cfg,
                                           std::vector<std::uint64_t> step_counts)
{
    if (step_counts.empty()) {
        step_counts = {cfg.n_steps, 4 * cfg.n_steps, 16 * cfg.n_steps};
    }
    if (step_counts.size() < 2) {
        throw ConfigError("extrapolation needs at least two step counts");
    }
    ExtrapolatedEstimate out;
    out.step_counts = step_counts;
    std::vector<double> h;
    for (const auto n : step_counts) {
        if (n < 1) {
            throw ConfigError("step counts must be >= 1");
        }
        McConfig level = cfg;
        level.n_steps = n;
        level.seed = mix_seed(cfg.seed ^ mix_seed(n));
        out.levels.push_back(mc_price(p, c, spec, level));
        h.push_back(1.0 / std::sqrt(static_cast<double>(n)));
    }
    const double m = static_cast<double>(h.size());
    double h_mean = 0.0;
    for (const double v : h) {
        h_mean += v / m;
    }
    double sxx = 0.0;
    for (const double v : h) {
        sxx += (v - h_mean) * (v - h_mean);
    }
    if (!(sxx > 0.0)) {
        throw ConfigError("extrapolation needs distinct step counts");
    }
    double var = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        // Intercept of the ordinary least-squares line through (h_i, value_i).
        const double weight = 1.0 / m - h_mean * (h[i] - h_mean) / sxx;
        out.value += weight * out.levels[i].value;
        var += weight * weight * out.levels[i].std_error * out.levels[i].std_error;
    }
    out.std_error = std::sqrt(var);
    return out;
}

AverageHistograms average_histograms(const AssetDynamics& p, const ControlDynamics& c, const McConfig& cfg,
                                     std::size_t bins)
{
    if (bins < 10) {
        throw ParameterError("histograms need at least 10 bins");
    }
    validate_for_density(p);
    AverageHistograms out;
    const McConfig norm = normalize_config(cfg, out.warnings);
    const PathSimulator sim(p, c, norm);

    const AverageMoments mom = average_moments(p, p.horizon);
    const double sd = std::sqrt(mom.variance);
    const double lo = mom.mean - 6.0 * sd;
    const double hi = mom.mean + 6.0 * sd;
    const double width = (hi - lo) / static_cast<double>(bins);
    out.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        out.edges[i] = lo + width * static_cast<double>(i);
    }
    out.edges.back() = hi;

    auto bin_of = [&](double v) {
        const double pos = std::floor((v - lo) / width);
        if (!(pos >= 0.0)) {
            return std::size_t{0};
        }
        return std::min(bins - 1, static_cast<std::size_t>(pos));
    };

    struct BlockCounts {
        std::vector<std::uint64_t> exact;
        std::vector<std::uint64_t> approx;
        std::uint64_t surviving = 0;
        std::uint64_t knocked = 0;
    };
    const auto blocks = run_blocks<BlockCounts>(norm.n_paths, norm.n_chunks, [&](std::uint64_t begin, std::uint64_t end) {
        BlockCounts counts;
        counts.exact.assign(bins, 0);
        counts.approx.assign(bins, 0);
        for (std::uint64_t i = begin; i < end; ++i) {
            const PathRecord r = sim.simulate(i);
            if (r.knocked_out) {
                ++counts.knocked;
                continue;
            }
            ++counts.surviving;
            ++counts.exact[bin_of(r.x_average)];
            ++counts.approx[bin_of(sim.approximate_average(i, r))];
        }
        return counts;
    });

    std::vector<std::uint64_t> exact(bins, 0);
    std::vector<std::uint64_t> approx(bins, 0);
    std::uint64_t knocked = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < bins; ++i) {
            exact[i] += b.exact[i];
            approx[i] += b.approx[i];
        }
        out.n_surviving += b.surviving;
        knocked += b.knocked;
    }
    out.knockout_fraction = static_cast<double>(knocked) / static_cast<double>(norm.n_paths);
    out.exact_mass.assign(bins, 0.0);
    out.approx_mass.assign(bins, 0.0);
    if (out.n_surviving == 0) {
        out.warnings.push_back("every path was knocked out; histograms are empty");
        return out;
    }
    const auto total = static_cast<double>(out.n_surviving);
    for (std::size_t i = 0; i < bins; ++i) {
        out.exact_mass[i] = static_cast<double>(exact[i]) / total;
        out.approx_mass[i] = static_cast<double>(approx[i]) / total;
    }
    return out;
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size()) {
        throw ParameterError("l1_distance: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::abs(a[i] - b[i]);
    }
    return sum;
}

}  // namespace asianpath
