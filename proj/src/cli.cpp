#include "ppacf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ppacf/binning.hpp"
#include "ppacf/errors.hpp"
#include "ppacf/estimator.hpp"
#include "ppacf/events_io.hpp"
#include "ppacf/null_bounds.hpp"
#include "ppacf/rng.hpp"
#include "ppacf/simulator.hpp"
#include "ppacf/svg.hpp"
#include "ppacf/theory.hpp"

namespace ppacf {

namespace {

constexpr std::uint64_t kDefaultSeed = 20250101;

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw invalid_argument("cannot open output file: " + out_path);
    f << text;
    if (!f) throw invalid_argument("failed writing to " + out_path);
}

LatentFamily parse_family(const std::string& name) {
    if (name == "wn" || name == "white-noise") return LatentFamily::white_noise;
    if (name == "ar1") return LatentFamily::ar1;
    if (name == "ma1") return LatentFamily::ma1;
    if (name == "sar1") return LatentFamily::sar1;
    if (name == "sma1") return LatentFamily::sma1;
    throw invalid_argument("unknown family '" + name +
                           "' (expected wn, ar1, ma1, sar1 or sma1)");
}

struct FamilyArgs {
    std::string family_name{"wn"};
    std::optional<double> a;
    std::optional<double> b;
    std::optional<int> tau;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
    cmd->add_option("--family", args.family_name,
                    "latent family: wn, ar1, ma1, sar1, sma1")
        ->required();
    cmd->add_option("--a", args.a, "AR coefficient (ar1/sar1), |a| < 1");
    cmd->add_option("--b", args.b, "MA coefficient (ma1/sma1)");
    cmd->add_option("--tau", args.tau, "seasonal period (sar1/sma1), >= 2");
}

// Scalar model with the unit-variance noise normalization.
LatentModelSpec build_scalar_model(const FamilyArgs& args,
                                   std::vector<std::string>& issues) {
    LatentFamily family = LatentFamily::white_noise;
    try {
        family = parse_family(args.family_name);
    } catch (const invalid_argument& e) {
        issues.push_back(e.what());
        return LatentModelSpec::scalar(LatentFamily::white_noise, 0.0, 1.0);
    }
    double coeff = 0.0;
    if (is_autoregressive(family)) {
        if (!args.a) issues.push_back("--a is required for " + args.family_name);
        if (args.b) issues.push_back("--b does not apply to " + args.family_name);
        coeff = args.a.value_or(0.0);
        if (!(std::abs(coeff) < 1.0)) {
            issues.push_back("--a must satisfy |a| < 1");
            coeff = 0.0;
        }
    } else if (is_moving_average(family)) {
        if (!args.b) issues.push_back("--b is required for " + args.family_name);
        if (args.a) issues.push_back("--a does not apply to " + args.family_name);
        coeff = args.b.value_or(0.0);
    } else {
        if (args.a || args.b)
            issues.push_back("--a/--b do not apply to white noise");
    }
    int tau = 1;
    if (is_seasonal(family)) {
        if (!args.tau) {
            issues.push_back("--tau is required for " + args.family_name);
            tau = 2;
        } else if (*args.tau < 2) {
            issues.push_back("--tau must be at least 2");
            tau = 2;
        } else {
            tau = *args.tau;
        }
    } else if (args.tau) {
        issues.push_back("--tau only applies to seasonal families");
    }
    return LatentModelSpec::scalar(family, coeff,
                                   unit_variance_noise(family, coeff), tau);
}

void throw_if_issues(const std::vector<std::string>& issues) {
    if (issues.empty()) return;
    std::string msg = "invalid configuration:";
    for (const auto& issue : issues) msg += "\n  - " + issue;
    throw invalid_argument(msg);
}

// ---- acf ----------------------------------------------------------------

struct AcfArgs {
    std::string events_path;
    std::vector<double> region;
    int bins{0};
    std::vector<int> grid;
    int max_lag{0};  // 0: min(20, n-1)
    double alpha{0.05};
    std::int64_t mc_draws{100000};
    std::uint64_t seed{kDefaultSeed};
    std::optional<double> floor;
    std::string out;
    std::string format{"csv"};
    std::string svg;
};

int run_acf(const AcfArgs& args) {
    std::vector<std::string> issues;
    const bool spatial = !args.grid.empty();
    if ((args.bins > 0) == spatial) {
        issues.push_back("exactly one of --bins or --grid must be given");
    }
    if (spatial && (args.grid.size() != 2 || args.grid[0] < 1 || args.grid[1] < 1)) {
        issues.push_back("--grid needs two positive integers: rows cols");
    }
    if (!spatial && args.bins < 1 && args.bins != 0) {
        issues.push_back("--bins must be positive");
    }
    if (!(args.alpha > 0.0 && args.alpha < 1.0)) {
        issues.push_back("--alpha must lie in (0, 1)");
    }
    if (args.mc_draws < 1000) {
        issues.push_back("--mc-draws must be at least 1000");
    }
    if (args.floor && !(*args.floor > 0.0)) {
        issues.push_back("--floor must be positive");
    }
    if (args.format != "csv" && args.format != "json") {
        issues.push_back("--format must be csv or json");
    }

    std::optional<Region> region;
    try {
        if (args.region.empty()) {
            region = spatial ? Region::rectangle(0.0, 1.0, 0.0, 1.0)
                             : Region::interval(0.0, 1.0);
        } else if (!spatial && args.region.size() == 2) {
            region = Region::interval(args.region[0], args.region[1]);
        } else if (spatial && args.region.size() == 4) {
            region = Region::rectangle(args.region[0], args.region[1],
                                       args.region[2], args.region[3]);
        } else {
            issues.push_back("--region needs 2 numbers (interval) or 4 (rectangle)");
        }
    } catch (const invalid_argument& e) {
        issues.push_back(e.what());
    }
    if (args.max_lag < 0) issues.push_back("--max-lag must be positive");
    throw_if_issues(issues);

    const LoadedEvents loaded = read_events(args.events_path, *region);
    if (loaded.dropped_outside > 0) {
        std::cerr << "warning: dropped " << loaded.dropped_outside
                  << " event(s) outside the region\n";
    }
    const int n = loaded.series.length();
    const int max_lag =
        args.max_lag > 0 ? args.max_lag : std::max(1, std::min(20, n - 1));

    const BinGrid grid = spatial
                             ? make_bin_grid(*region, args.grid[0], args.grid[1])
                             : make_bin_grid(*region, args.bins);
    const BinnedCountSeries y = bin_series(loaded.series, grid);

    GammaPolicy policy;
    policy.ratio_floor = args.floor;
    Autocorrelogram acf = autocorrelogram(y, max_lag, policy);
    acf = attach_bounds(std::move(acf), y, args.alpha, args.mc_draws, args.seed);

    write_text(args.out, args.format == "csv" ? autocorrelogram_csv(acf)
                                              : autocorrelogram_json(acf));
    if (!args.svg.empty()) emit_figure(acf, args.svg);
    return 0;
}

// ---- simulate -----------------------------------------------------------

struct SimulateArgs {
    FamilyArgs family;
    int n{400};
    std::uint64_t seed{kDefaultSeed};
    std::optional<int> burn_in;
    std::string out;
};

int run_simulate(const SimulateArgs& args) {
    std::vector<std::string> issues;
    if (args.n < 1) issues.push_back("--n must be positive");
    if (args.burn_in && *args.burn_in < 0)
        issues.push_back("--burn-in must be nonnegative");
    const LatentModelSpec latent = build_scalar_model(args.family, issues);
    throw_if_issues(issues);

    SimulationDesign design;
    design.basis = default_basis();
    design.latent = latent;
    design.n = args.n;
    design.burn_in = args.burn_in;
    design.seed = args.seed;
    const PointPatternSeries series = simulate_series(design);

    if (args.out.empty()) {
        std::ostringstream buffer;
        buffer << "t,s\n";
        for (int t = 0; t < series.length(); ++t) {
            for (const Point& p :
                 series.patterns()[static_cast<std::size_t>(t)].points()) {
                buffer << (t + 1) << ',' << format_full(p.x) << '\n';
            }
        }
        std::cout << buffer.str();
    } else {
        write_events(series, args.out);
    }
    return 0;
}

// ---- power --------------------------------------------------------------

struct PowerArgs {
    FamilyArgs family;
    std::vector<int> n_list;
    int bins{5};
    int max_lag{10};
    int replicates{500};
    double alpha{0.10};
    std::uint64_t seed{kDefaultSeed};
    std::int64_t mc_draws{20000};
    std::string out;
};

int run_power(const PowerArgs& args) {
    std::vector<std::string> issues;
    if (args.n_list.empty()) issues.push_back("--n-list must not be empty");
    for (int n : args.n_list) {
        if (n <= args.max_lag)
            issues.push_back("every n must exceed --max-lag, got n=" +
                             std::to_string(n));
    }
    if (args.bins < 1) issues.push_back("--bins must be positive");
    if (args.max_lag < 1) issues.push_back("--max-lag must be positive");
    if (args.replicates < 1) issues.push_back("--replicates must be positive");
    if (!(args.alpha > 0.0 && args.alpha < 1.0))
        issues.push_back("--alpha must lie in (0, 1)");
    if (args.mc_draws < 1000) issues.push_back("--mc-draws must be at least 1000");
    const LatentModelSpec latent = build_scalar_model(args.family, issues);
    throw_if_issues(issues);

    std::ostringstream out;
    out << "family,coeff,tau,n,lag,rho_tilde,mean_rho_hat,mean_abs_err,"
           "exceedance_rate,failed_replicates\n";
    const double coeff =
        latent.family == LatentFamily::white_noise ? 0.0 : latent.coeff(0, 0);
    for (int n : args.n_list) {
        SimulationDesign design;
        design.basis = default_basis();
        design.latent = latent;
        design.n = n;

        ExperimentConfig config;
        config.bins = args.bins;
        config.max_lag = args.max_lag;
        config.replicates = args.replicates;
        config.alpha = args.alpha;
        config.seed = substream_seed(args.seed, streams::replicate,
                                     static_cast<std::uint64_t>(n));
        config.mc_draws = args.mc_draws;

        const ExperimentReport report = run_experiment(design, config);
        for (int k = 1; k <= args.max_lag; ++k) {
            const std::size_t i = static_cast<std::size_t>(k - 1);
            out << family_name(latent.family) << ',' << format_full(coeff) << ','
                << latent.period << ',' << n << ',' << k << ','
                << format_full(report.rho_tilde[i]) << ','
                << format_full(report.mean_rho[i]) << ','
                << format_full(report.mean_abs_err[i]) << ','
                << format_full(report.exceed_rate[i]) << ','
                << report.failed_replicates << '\n';
        }
    }
    write_text(args.out, out.str());
    return 0;
}

// ---- oracle -------------------------------------------------------------

struct OracleArgs {
    FamilyArgs family;
    int max_lag{10};
    int bins{0};  // 0: functional autocorrelations only
    std::string out;
};

int run_oracle(const OracleArgs& args) {
    std::vector<std::string> issues;
    if (args.max_lag < 1) issues.push_back("--max-lag must be positive");
    if (args.bins < 0) issues.push_back("--bins must be positive");
    const LatentModelSpec latent = build_scalar_model(args.family, issues);
    throw_if_issues(issues);

    std::ostringstream out;
    if (args.bins > 0) {
        const BasisSpec basis = default_basis();
        const BinGrid grid = make_bin_grid(basis.region, args.bins);
        out << "lag,rho_tilde,rho_binned\n";
        for (int k = 1; k <= args.max_lag; ++k) {
            out << k << ',' << format_full(rho_tilde(latent, k)) << ','
                << format_full(population_rho_k(latent, basis, grid, k)) << '\n';
        }
    } else {
        out << "lag,rho_tilde\n";
        for (int k = 1; k <= args.max_lag; ++k) {
            out << k << ',' << format_full(rho_tilde(latent, k)) << '\n';
        }
    }
    write_text(args.out, out.str());
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    bool json_errors = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string_view(argv[i]) == "--json-errors") json_errors = true;
    }

    CLI::App app{"binned autocorrelograms with Monte-Carlo significance bounds "
                 "for point-process time series"};
    app.require_subcommand(1);
    app.add_flag("--json-errors",
                 "emit a machine-readable error object on stderr");

    AcfArgs acf_args;
    CLI::App* acf = app.add_subcommand(
        "acf", "compute an autocorrelogram from an event CSV");
    acf->fallthrough();
    acf->add_option("events", acf_args.events_path, "event CSV file")
        ->required();
    acf->add_option("--region", acf_args.region,
                    "region bounds: lo hi (interval) or xlo xhi ylo yhi");
    acf->add_option("--bins", acf_args.bins, "number of temporal bins");
    acf->add_option("--grid", acf_args.grid, "spatial grid: rows cols");
    acf->add_option("--max-lag", acf_args.max_lag,
                    "maximum lag (default min(20, n-1))");
    acf->add_option("--alpha", acf_args.alpha,
                    "upper-bound significance level (default 0.05)");
    acf->add_option("--mc-draws", acf_args.mc_draws,
                    "Monte-Carlo draws for the bound (default 100000)");
    acf->add_option("--seed", acf_args.seed, "RNG seed (default 20250101)");
    acf->add_option("--floor", acf_args.floor,
                    "clamp covariance ratios at this value before the log");
    acf->add_option("--out", acf_args.out, "output path (default stdout)");
    acf->add_option("--format", acf_args.format, "csv or json (default csv)");
    acf->add_option("--svg", acf_args.svg, "also write a stem-plot SVG here");

    SimulateArgs sim_args;
    CLI::App* sim = app.add_subcommand(
        "simulate", "simulate an event CSV from the built-in design");
    sim->fallthrough();
    add_family_options(sim, sim_args.family);
    sim->add_option("--n", sim_args.n, "series length (default 400)");
    sim->add_option("--seed", sim_args.seed, "RNG seed (default 20250101)");
    sim->add_option("--burn-in", sim_args.burn_in,
                    "latent warm-up steps (default: family rule)");
    sim->add_option("--out", sim_args.out, "output path (default stdout)");

    PowerArgs power_args;
    CLI::App* power = app.add_subcommand(
        "power", "Monte-Carlo detection rates against the null bound");
    power->fallthrough();
    add_family_options(power, power_args.family);
    power->add_option("--n-list", power_args.n_list, "series lengths")
        ->required()
        ->delimiter(',');
    power->add_option("--bins", power_args.bins, "bins (default 5)");
    power->add_option("--max-lag", power_args.max_lag, "max lag (default 10)");
    power->add_option("--replicates", power_args.replicates,
                      "replicates per n (default 500)");
    power->add_option("--alpha", power_args.alpha,
                      "bound level (default 0.10)");
    power->add_option("--seed", power_args.seed, "RNG seed (default 20250101)");
    power->add_option("--mc-draws", power_args.mc_draws,
                      "Monte-Carlo draws per bound (default 20000)");
    power->add_option("--out", power_args.out, "output path (default stdout)");

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "closed-form functional and binned autocorrelations");
    oracle->fallthrough();
    add_family_options(oracle, oracle_args.family);
    oracle->add_option("--max-lag", oracle_args.max_lag,
                       "max lag (default 10)");
    oracle->add_option("--bins", oracle_args.bins,
                       "also integrate the binned values over this many bins");
    oracle->add_option("--out", oracle_args.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        if (json_errors) {
            nlohmann::json j;
            j["error"]["kind"] = "validation";
            j["error"]["message"] = e.what();
            std::cerr << j.dump() << '\n';
        } else {
            std::cerr << "error: " << e.what() << '\n';
        }
        return 1;
    }

    try {
        if (acf->parsed()) return run_acf(acf_args);
        if (sim->parsed()) return run_simulate(sim_args);
        if (power->parsed()) return run_power(power_args);
        if (oracle->parsed()) return run_oracle(oracle_args);
        return 1;
    } catch (const invalid_argument& e) {
        if (json_errors) {
            nlohmann::json j;
            j["error"]["kind"] = "validation";
            j["error"]["message"] = e.what();
            std::cerr << j.dump() << '\n';
        } else {
            std::cerr << "error: " << e.what() << '\n';
        }
        return 1;
    } catch (const numerical_error& e) {
        if (json_errors) {
            nlohmann::json j;
            j["error"]["kind"] = "numerical";
            j["error"]["message"] = e.what();
            std::cerr << j.dump() << '\n';
        } else {
            std::cerr << "numerical error: " << e.what() << '\n';
        }
        return 2;
    }
}

}  // namespace ppacf
