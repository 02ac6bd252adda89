#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "asianpath/errors.hpp"
#include "asianpath/montecarlo.hpp"
#include "asianpath/pricers.hpp"
#include "asianpath/propagators.hpp"
#include "asianpath/version.hpp"

namespace asianpath::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModelFlags {
    std::string kind;
    std::optional<double> mu, sigma, s0, horizon, rate;
    std::optional<double> strike, nu, xi, s0y, rho, barrier;
};

struct McFlags {
    std::uint64_t paths = 500'000;
    std::uint64_t steps = 100;
    std::uint64_t seed = 1;
    std::uint64_t chunks = 1;
    bool antithetic = false;
};

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json manifest(const std::string& command, const json& parameters, std::optional<std::uint64_t> seed)
{
    json m;
    m["command"] = command;
    m["parameters"] = parameters;
    m["seed"] = seed ? json(*seed) : json(nullptr);
    m["tool_version"] = kVersion;
    m["timestamp"] = utc_timestamp();
    return m;
}

json warnings_json(const std::vector<std::string>& warnings)
{
    json arr = json::array();
    for (const auto& w : warnings) {
        arr.push_back(w);
    }
    return arr;
}

void add_asset_flags(CLI::App* cmd, ModelFlags& f, bool require_rate)
{
    cmd->add_option("--mu", f.mu, "drift of the asset, per year")->required();
    cmd->add_option("--sigma", f.sigma, "volatility of the asset, per sqrt-year")->required();
    cmd->add_option("--s0", f.s0, "spot price of the asset")->required();
    cmd->add_option("--T", f.horizon, "maturity in years")->required();
    auto* rate = cmd->add_option("--r", f.rate, "discount rate, per year");
    if (require_rate) {
        rate->required();
    }
}

void add_control_flags(CLI::App* cmd, ModelFlags& f)
{
    cmd->add_option("--strike", f.strike, "strike K");
    cmd->add_option("--nu", f.nu, "drift of the control process, per year");
    cmd->add_option("--xi", f.xi, "volatility of the control process, per sqrt-year");
    cmd->add_option("--s0y", f.s0y, "spot of the control process");
    cmd->add_option("--rho", f.rho, "correlation between the two drivers");
    cmd->add_option("--barrier", f.barrier, "up-and-out barrier level B on the control process");
}

void add_mc_flags(CLI::App* cmd, McFlags& m)
{
    cmd->add_option("--paths", m.paths, "number of simulated paths")->capture_default_str();
    cmd->add_option("--steps", m.steps, "time steps per path")->capture_default_str();
    cmd->add_option("--seed", m.seed, "64-bit seed")->capture_default_str();
    cmd->add_option("--chunks", m.chunks, "parallel lanes")->capture_default_str();
    cmd->add_flag("--antithetic", m.antithetic, "antithetic pairing");
}

double need(const std::optional<double>& v, const char* flag, const std::string& why)
{
    if (!v) {
        throw UsageError(std::string("missing ") + flag + " (required " + why + ")");
    }
    return *v;
}

OptionKind kind_of(const ModelFlags& f)
{
    try {
        return parse_option_kind(f.kind);
    } catch (const ParameterError& e) {
        throw UsageError(std::string("--kind: ") + e.what());
    }
}

AssetDynamics asset_of(const ModelFlags& f)
{
    return {need(f.mu, "--mu", "for the asset"), need(f.sigma, "--sigma", "for the asset"),
            need(f.s0, "--s0", "for the asset"), need(f.horizon, "--T", "for the asset")};
}

ControlDynamics control_of(const ModelFlags& f, const std::string& why)
{
    ControlDynamics c;
    c.nu = need(f.nu, "--nu", why);
    c.xi = need(f.xi, "--xi", why);
    c.s0y = need(f.s0y, "--s0y", why);
    c.rho = Correlation(need(f.rho, "--rho", why));
    c.barrier = need(f.barrier, "--barrier", why);
    return c;
}

OptionSpec spec_of(const ModelFlags& f, OptionKind kind)
{
    OptionSpec spec;
    spec.kind = kind;
    spec.rate = need(f.rate, "--r", "for pricing");
    const bool uses_strike = kind == OptionKind::AveragePriceCall || kind == OptionKind::AveragePricePut ||
                             kind == OptionKind::BarrierAveragePriceCall;
    if (uses_strike) {
        spec.strike = need(f.strike, "--strike", "for kind " + f.kind);
    }
    return spec;
}

std::optional<ControlDynamics> optional_control(const ModelFlags& f, OptionKind kind)
{
    if (needs_control(kind)) {
        return control_of(f, "for kind " + f.kind);
    }
    return std::nullopt;
}

json inputs_json(const ModelFlags& f)
{
    json in;
    in["kind"] = f.kind;
    auto put = [&](const char* name, const std::optional<double>& v) {
        if (v) {
            in[name] = *v;
        }
    };
    put("mu", f.mu);
    put("sigma", f.sigma);
    put("s0", f.s0);
    put("T", f.horizon);
    put("r", f.rate);
    put("strike", f.strike);
    put("nu", f.nu);
    put("xi", f.xi);
    put("s0y", f.s0y);
    put("rho", f.rho);
    put("barrier", f.barrier);
    return in;
}

json mc_json(const McFlags& m)
{
    return {{"paths", m.paths}, {"steps", m.steps}, {"seed", m.seed}, {"chunks", m.chunks}, {"antithetic", m.antithetic}};
}

McConfig config_of(const McFlags& m)
{
    return {m.paths, m.steps, m.seed, m.chunks, m.antithetic};
}

json price_result_json(const PriceResult& r)
{
    json breakdown = json::object();
    for (const auto& [name, value] : r.breakdown) {
        breakdown[name] = value;
    }
    json flags = json::array();
    for (const auto& flag : r.flags) {
        flags.push_back(flag);
    }
    return {{"value", r.value}, {"breakdown", breakdown}, {"flags", flags}};
}

void emit_file_or_stream(const std::optional<std::string>& path, const std::string& body, const json& man,
                         std::ostream& out)
{
    if (!path) {
        out << body;
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open --out file '" + *path + "'");
    }
    file << body;
    std::ofstream side(*path + ".manifest.json", std::ios::binary);
    side << man.dump(2) << '\n';
    out << man.dump(2) << '\n';
}

// ---------------------------------------------------------------- price

int cmd_price(const ModelFlags& f, std::ostream& out)
{
    const OptionKind kind = kind_of(f);
    if (!has_closed_form(kind)) {
        throw UsageError("kind " + f.kind + " has no closed form; use the mc subcommand");
    }
    const AssetDynamics p = asset_of(f);
    const OptionSpec spec = spec_of(f, kind);
    const auto control = optional_control(f, kind);
    const PriceResult r = price_closed_form(p, control ? &*control : nullptr, spec);

    json doc;
    doc["command"] = "price";
    doc["kind"] = f.kind;
    doc["inputs"] = inputs_json(f);
    const json body = price_result_json(r);
    doc["value"] = body["value"];
    doc["breakdown"] = body["breakdown"];
    doc["flags"] = body["flags"];
    doc["manifest"] = manifest("price", inputs_json(f), std::nullopt);
    out << doc.dump(2) << '\n';
    return kSuccess;
}

// ---------------------------------------------------------------- mc

int cmd_mc(const ModelFlags& f, const McFlags& m, std::ostream& out, std::ostream& err)
{
    const OptionKind kind = kind_of(f);
    const AssetDynamics p = asset_of(f);
    const OptionSpec spec = spec_of(f, kind);
    const auto control = optional_control(f, kind);
    const PriceEstimate est = mc_price(p, control, spec, config_of(m));

    std::vector<std::string> warnings = est.warnings;
    json doc;
    doc["command"] = "mc";
    doc["kind"] = f.kind;
    doc["inputs"] = inputs_json(f);
    doc["value"] = est.value;
    if (est.n_effective < 2) {
        doc["std_error"] = nullptr;
    } else {
        doc["std_error"] = est.std_error;
    }
    doc["n_effective"] = est.n_effective;
    if (est.knockout_fraction) {
        doc["knockout_fraction"] = *est.knockout_fraction;
    }
    doc["warnings"] = warnings_json(warnings);
    json params = inputs_json(f);
    params["mc"] = mc_json(m);
    doc["manifest"] = manifest("mc", params, m.seed);
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }
    out << doc.dump(2) << '\n';
    return kSuccess;
}

// ---------------------------------------------------------------- sweep

struct SweepFlags {
    std::string param;
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    std::vector<double> rho_list;
    bool extrapolate = false;
    std::optional<std::string> out_path;
};

void set_param(ModelFlags& f, const std::string& name, double value)
{
    static const std::vector<std::pair<std::string, std::optional<double> ModelFlags::*>> table = {
        {"mu", &ModelFlags::mu},         {"sigma", &ModelFlags::sigma}, {"s0", &ModelFlags::s0},
        {"T", &ModelFlags::horizon},     {"r", &ModelFlags::rate},      {"strike", &ModelFlags::strike},
        {"nu", &ModelFlags::nu},         {"xi", &ModelFlags::xi},       {"s0y", &ModelFlags::s0y},
        {"barrier", &ModelFlags::barrier}};
    for (const auto& [key, member] : table) {
        if (key == name) {
            f.*member = value;
            return;
        }
    }
    throw UsageError("--param: cannot sweep '" + name + "'");
}

int cmd_sweep(ModelFlags f, const McFlags& m, const SweepFlags& s, std::ostream& out, std::ostream& err)
{
    const OptionKind kind = kind_of(f);
    if (!has_closed_form(kind)) {
        throw UsageError("kind " + f.kind + " has no closed form to sweep");
    }
    if (s.points < 1) {
        throw UsageError("--points must be >= 1");
    }
    if (!std::isfinite(s.from) || !std::isfinite(s.to) || (s.points > 1 && !(s.from < s.to))) {
        throw UsageError("sweep range must be increasing: --from < --to");
    }
    set_param(f, s.param, s.from);  // validates the name

    std::vector<double> rhos = s.rho_list;
    if (rhos.empty()) {
        rhos.push_back(f.rho.value_or(0.0));
    }

    std::ostringstream csv;
    csv << "param_value,rho,analytic_value,mc_value,mc_std_error\n";
    std::vector<std::string> warnings;
    for (const double rho : rhos) {
        for (int i = 0; i < s.points; ++i) {
            const double value =
                s.points == 1 ? s.from : s.from + (s.to - s.from) * static_cast<double>(i) / (s.points - 1);
            ModelFlags row = f;
            row.rho = rho;
            set_param(row, s.param, value);
            const AssetDynamics p = asset_of(row);
            const OptionSpec spec = spec_of(row, kind);
            const auto control = optional_control(row, kind);
            const PriceResult analytic = price_closed_form(p, control ? &*control : nullptr, spec);
            double mc_value = 0.0;
            double mc_se = 0.0;
            if (s.extrapolate) {
                const auto est = mc_price_extrapolated(p, control, spec, config_of(m));
                mc_value = est.value;
                mc_se = est.std_error;
            } else {
                const auto est = mc_price(p, control, spec, config_of(m));
                mc_value = est.value;
                mc_se = est.std_error;
                warnings.insert(warnings.end(), est.warnings.begin(), est.warnings.end());
            }
            csv << format_double(value) << ',' << format_double(rho) << ',' << format_double(analytic.value) << ','
                << format_double(mc_value) << ',' << format_double(mc_se) << '\n';
        }
    }
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }

    json params = inputs_json(f);
    params["mc"] = mc_json(m);
    json rho_json = json::array();
    for (const double r : rhos) {
        rho_json.push_back(r);
    }
    params["sweep"] = {{"param", s.param},
                       {"from", s.from},
                       {"to", s.to},
                       {"points", s.points},
                       {"rho_list", rho_json},
                       {"extrapolate", s.extrapolate}};
    emit_file_or_stream(s.out_path, csv.str(), manifest("sweep", params, m.seed), out);
    return kSuccess;
}

// ---------------------------------------------------------------- histogram

int cmd_histogram(const ModelFlags& f, const McFlags& m, int bins, const std::optional<std::string>& out_path,
                  std::ostream& out, std::ostream& err)
{
    if (bins < 10) {
        throw UsageError("--bins must be >= 10");
    }
    const AssetDynamics p = asset_of(f);
    const ControlDynamics c = control_of(f, "for histograms");
    const AverageHistograms h = average_histograms(p, c, config_of(m), static_cast<std::size_t>(bins));
    for (const auto& w : h.warnings) {
        err << "warning: " << w << '\n';
    }

    std::ostringstream csv;
    csv << "bin_left,bin_right,exact_mass,approx_mass\n";
    for (std::size_t i = 0; i < h.exact_mass.size(); ++i) {
        csv << format_double(h.edges[i]) << ',' << format_double(h.edges[i + 1]) << ','
            << format_double(h.exact_mass[i]) << ',' << format_double(h.approx_mass[i]) << '\n';
    }
    json params = inputs_json(f);
    params.erase("kind");
    params["mc"] = mc_json(m);
    params["bins"] = bins;
    json man = manifest("histogram", params, m.seed);
    man["summary"] = {{"n_surviving", h.n_surviving},
                      {"knockout_fraction", h.knockout_fraction},
                      {"l1_distance", l1_distance(h.exact_mass, h.approx_mass)}};
    emit_file_or_stream(out_path, csv.str(), man, out);
    return kSuccess;
}

// ---------------------------------------------------------------- propagator-grid

struct Axis {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
    bool hi_is_barrier = false;
};

double parse_number(const std::string& text, const std::string& context)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw UsageError("--grid: bad number '" + text + "' in " + context);
    }
}

std::vector<Axis> parse_grid(const std::string& spec)
{
    std::vector<Axis> axes;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw UsageError("--grid: expected name=lo:hi:points, got '" + item + "'");
        }
        Axis a;
        a.name = item.substr(0, eq);
        if (a.name != "x" && a.name != "xbar" && a.name != "y") {
            throw UsageError("--grid: axis must be x, xbar or y, got '" + a.name + "'");
        }
        std::vector<std::string> parts;
        std::stringstream range(item.substr(eq + 1));
        std::string part;
        while (std::getline(range, part, ':')) {
            parts.push_back(part);
        }
        if (parts.size() != 3) {
            throw UsageError("--grid: expected name=lo:hi:points, got '" + item + "'");
        }
        a.lo = parse_number(parts[0], item);
        if (parts[1] == "yb") {
            a.hi_is_barrier = true;
        } else {
            a.hi = parse_number(parts[1], item);
        }
        a.points = static_cast<int>(parse_number(parts[2], item));
        if (a.points < 1) {
            throw UsageError("--grid: axis '" + a.name + "' needs at least one point");
        }
        axes.push_back(a);
    }
    if (axes.size() != 2 || axes[0].name == axes[1].name) {
        throw UsageError("--grid: give exactly two distinct axes");
    }
    return axes;
}

int cmd_grid(const ModelFlags& f, const std::string& density, const std::string& grid, double fixed_x,
             double fixed_xbar, double fixed_y, const std::optional<std::string>& out_path, std::ostream& out)
{
    const AssetDynamics p = asset_of(f);
    const bool is_joint = density == "joint";
    const bool is_two = density == "two-process";
    const bool is_barrier = density == "barrier";
    if (!is_joint && !is_two && !is_barrier) {
        throw UsageError("--density must be joint, two-process or barrier");
    }
    std::optional<ControlDynamics> c;
    if (!is_joint) {
        c = control_of(f, "for --density " + density);
        c->rho.require_nondegenerate("propagator-grid");
    }
    std::vector<Axis> axes = parse_grid(grid);
    const double y_b = c ? c->log_barrier() : 0.0;
    for (auto& a : axes) {
        if (a.hi_is_barrier) {
            if (!is_barrier) {
                throw UsageError("--grid: 'yb' needs --density barrier");
            }
            a.hi = y_b;
        }
        if (a.points > 1 && !(a.lo < a.hi)) {
            throw UsageError("--grid: axis '" + a.name + "' range must be increasing");
        }
        if (is_joint && a.name == "y") {
            throw UsageError("--grid: the joint density has no y axis");
        }
    }

    auto coordinate = [](const Axis& a, int i) {
        if (a.points == 1) {
            return a.lo;
        }
        if (i == a.points - 1) {
            return a.hi;
        }
        return a.lo + (a.hi - a.lo) * static_cast<double>(i) / (a.points - 1);
    };

    if (is_barrier) {
        for (const auto& a : axes) {
            if (a.name == "y" && coordinate(a, a.points - 1) > y_b) {
                throw DomainError("grid reaches y = " + format_double(a.hi) + " above the barrier y_B = " +
                                  format_double(y_b));
            }
        }
        if (axes[0].name != "y" && axes[1].name != "y" && fixed_y > y_b) {
            throw DomainError("fixed y lies above the barrier y_B = " + format_double(y_b));
        }
    }

    std::ostringstream csv;
    csv << axes[0].name << ',' << axes[1].name << ",density\n";
    for (int i = 0; i < axes[0].points; ++i) {
        for (int j = 0; j < axes[1].points; ++j) {
            StatePoint s{fixed_x, fixed_xbar, fixed_y};
            const double u = coordinate(axes[0], i);
            const double v = coordinate(axes[1], j);
            for (const auto& [axis, value] : {std::pair{&axes[0], u}, std::pair{&axes[1], v}}) {
                if (axis->name == "x") {
                    s.x = value;
                } else if (axis->name == "xbar") {
                    s.xbar = value;
                } else {
                    s.y = value;
                }
            }
            double d = 0.0;
            if (is_joint) {
                d = joint_density(p, s);
            } else if (is_two) {
                d = two_process_density(p, *c, s);
            } else {
                d = barrier_density(p, *c, s);
            }
            csv << format_double(u) << ',' << format_double(v) << ',' << format_double(d) << '\n';
        }
    }

    json params = inputs_json(f);
    params.erase("kind");
    params["density"] = density;
    params["grid"] = grid;
    params["fixed"] = {{"x", fixed_x}, {"xbar", fixed_xbar}, {"y", fixed_y}};
    emit_file_or_stream(out_path, csv.str(), manifest("propagator-grid", params, std::nullopt), out);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Geometric Asian option pricing: closed forms, Monte Carlo and propagator grids", "asianpath"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    ModelFlags model;
    McFlags mc;

    auto* price = app.add_subcommand("price", "closed-form price as JSON");
    price->add_option("--kind", model.kind, "avg-strike-call | avg-price-call | barrier-avg-price-call")->required();
    add_asset_flags(price, model, true);
    add_control_flags(price, model);

    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo price as JSON");
    mc_cmd->add_option("--kind", model.kind, "option kind (puts included)")->required();
    add_asset_flags(mc_cmd, model, true);
    add_control_flags(mc_cmd, model);
    add_mc_flags(mc_cmd, mc);

    SweepFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "closed form and Monte Carlo over a parameter range, CSV");
    sweep->add_option("--kind", model.kind, "option kind")->default_val("barrier-avg-price-call");
    add_asset_flags(sweep, model, true);
    add_control_flags(sweep, model);
    add_mc_flags(sweep, mc);
    sweep->add_option("--param", sweep_flags.param, "swept parameter (e.g. s0y)")->required();
    sweep->add_option("--from", sweep_flags.from, "first value")->required();
    sweep->add_option("--to", sweep_flags.to, "last value")->required();
    sweep->add_option("--points", sweep_flags.points, "number of points")->required();
    sweep->add_option("--rho-list", sweep_flags.rho_list, "correlations, comma separated")->delimiter(',');
    sweep->add_flag("--extrapolate", sweep_flags.extrapolate,
                    "extrapolate MC over steps {n, 4n, 16n} to continuous monitoring");
    sweep->add_option("--out", sweep_flags.out_path, "CSV output file (default stdout)");

    int bins = 50;
    std::optional<std::string> hist_out;
    auto* histogram = app.add_subcommand("histogram", "exact vs approximate average histograms, CSV");
    add_asset_flags(histogram, model, false);
    add_control_flags(histogram, model);
    add_mc_flags(histogram, mc);
    histogram->add_option("--bins", bins, "number of bins (>= 10)")->capture_default_str();
    histogram->add_option("--out", hist_out, "CSV output file (default stdout)");

    std::string density = "barrier";
    std::string grid;
    double fixed_x = 0.0;
    double fixed_xbar = 0.0;
    double fixed_y = 0.0;
    std::optional<std::string> grid_out;
    auto* grid_cmd = app.add_subcommand("propagator-grid", "density on a 2-D grid, CSV");
    grid_cmd->add_option("--mu", model.mu, "drift of the asset")->required();
    grid_cmd->add_option("--sigma", model.sigma, "volatility of the asset")->required();
    grid_cmd->add_option("--T", model.horizon, "horizon in years")->required();
    grid_cmd->add_option("--s0", model.s0, "spot of the asset")->default_val(1.0);
    add_control_flags(grid_cmd, model);
    grid_cmd->add_option("--density", density, "joint | two-process | barrier")->capture_default_str();
    grid_cmd->add_option("--grid", grid, "two axes, e.g. x=-0.5:0.5:21,y=-0.4:yb:21")->required();
    grid_cmd->add_option("--x", fixed_x, "fixed x when not on an axis")->capture_default_str();
    grid_cmd->add_option("--xbar", fixed_xbar, "fixed xbar when not on an axis")->capture_default_str();
    grid_cmd->add_option("--y", fixed_y, "fixed y when not on an axis")->capture_default_str();
    grid_cmd->add_option("--out", grid_out, "CSV output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (price->parsed()) {
            return cmd_price(model, out);
        }
        if (mc_cmd->parsed()) {
            return cmd_mc(model, mc, out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(model, mc, sweep_flags, out, err);
        }
        if (histogram->parsed()) {
            return cmd_histogram(model, mc, bins, hist_out, out, err);
        }
        if (grid_cmd->parsed()) {
            return cmd_grid(model, density, grid, fixed_x, fixed_xbar, fixed_y, grid_out, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

}  // namespace asianpath::cli
