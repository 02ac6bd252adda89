#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asianpath/dynamics.hpp"
#include "asianpath/pricers.hpp"

namespace asianpath {

/// Simulation settings. Results are a pure function of every field here and
/// of nothing else: each path draws from its own Philox stream keyed by
/// (seed, path index), and per-block summaries are merged in block order, so
/// the chunk count only changes how work is spread over threads.
struct McConfig {
    std::uint64_t n_paths = 500'000;
    std::uint64_t n_steps = 100;
    std::uint64_t seed = 1;
    std::uint64_t n_chunks = 1;
    /// Paths 2j and 2j+1 share draws with opposite signs.
    bool antithetic = false;
};

/// Checks ranges and rounds n_paths up to a multiple of n_chunks (and to an
/// even count under antithetic pairing). Every adjustment appends a warning.
McConfig normalize_config(const McConfig& cfg, std::vector<std::string>& warnings);

/// Summary of one simulated path.
///
/// x_average is the trapezoidal time average of x over the step grid
/// t_k = k T / n (x_0 = 0 included with half weight).
struct PathRecord {
    double x_terminal = 0.0;
    double x_average = 0.0;
    /// Running maximum of y over t_0..t_n; 0 without a control process.
    double y_max = 0.0;
    bool knocked_out = false;
};

/// Discrete Euler paths for x and, optionally, the correlated control y:
///
///   x_{k+1} = x_k + (mu - sigma^2/2) dt + sigma sqrt(dt) z1,
///   y_{k+1} = y_k + (nu - xi^2/2) dt + xi sqrt(dt) z2,
///
/// with (z1, z2) from sample_correlated_pair. The barrier is checked at
/// every grid point.
class PathSimulator {
public:
    PathSimulator(const AssetDynamics& p, const std::optional<ControlDynamics>& c, const McConfig& cfg);

    /// With stop_at_knockout the walk ends at the first breach; x fields are
    /// then partial and only knocked_out / y_max are meaningful.
    PathRecord simulate(std::uint64_t index, bool stop_at_knockout = false) const;

    /// Terminal draw of the "approximate average": Gaussian with the moments
    /// of xbar_T and correlation sqrt(3)/2 with x_T, built from the path's own
    /// terminal x and an independent normal. Needs sigma > 0 and T > 0.
    double approximate_average(std::uint64_t index, const PathRecord& record) const;

private:
    AssetDynamics asset_;
    std::optional<ControlDynamics> control_;
    McConfig cfg_;
    double dt_;
    double sqrt_dt_;
    double log_barrier_;
};

/// Simulates every path of cfg in index order. Memory O(n_paths).
std::vector<PathRecord> simulate_paths(const AssetDynamics& p, const std::optional<ControlDynamics>& c,
                                       const McConfig& cfg);

struct PriceEstimate {
    double value = 0.0;
    double std_error = 0.0;
    /// Independent samples behind the estimate (pairs under antithetic pairing).
    std::uint64_t n_effective = 0;
    std::optional<double> knockout_fraction;
    std::vector<std::string> warnings;
};

/// Discounted sample mean of the payoff; std_error = e^{-rT} sd / sqrt(n_effective).
/// Barrier kinds require a control process (ConfigError otherwise).
PriceEstimate mc_price(const AssetDynamics& p, const std::optional<ControlDynamics>& c, const OptionSpec& spec,
                       const McConfig& cfg);

struct ExtrapolatedEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::vector<std::uint64_t> step_counts;
    std::vector<PriceEstimate> levels;
};

/// Removes the leading discrete-monitoring bias by a least-squares fit of
/// value(n) = v + c / sqrt(n) over the given step counts, each level run on
/// its own seed derived from (cfg.seed, n). Empty step_counts means
/// {n, 4n, 16n} with n = cfg.n_steps.
ExtrapolatedEstimate mc_price_extrapolated(const AssetDynamics& p, const std::optional<ControlDynamics>& c,
                                           const OptionSpec& spec, const McConfig& cfg,
                                           std::vector<std::uint64_t> step_counts = {});

struct AverageHistograms {
    std::vector<double> edges;  // bins + 1 entries
    std::vector<double> exact_mass;
    std::vector<double> approx_mass;
    std::uint64_t n_surviving = 0;
    double knockout_fraction = 0.0;
    std::vector<std::string> warnings;
};

/// Histograms of the exact path average and of the approximate (terminal
/// Gaussian) average over paths that did not breach the barrier. The range
/// is the xbar_T mean +- 6 standard deviations; values outside fall into the
/// edge bins. Each histogram has unit mass.
AverageHistograms average_histograms(const AssetDynamics& p, const ControlDynamics& c, const McConfig& cfg,
                                     std::size_t bins);

/// L1 distance between two mass vectors of equal length.
double l1_distance(const std::vector<double>& a, const std::vector<double>& b);

/// Worker threads used for n_chunks lanes, capped by ASIANPATH_THREADS.
unsigned worker_count(std::uint64_t n_chunks);

}  // namespace asianpath
