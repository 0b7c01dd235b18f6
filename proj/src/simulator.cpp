#include "ppacf/simulator.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "ppacf/estimator.hpp"
#include "ppacf/null_bounds.hpp"
#include "ppacf/rng.hpp"
#include "ppacf/theory.hpp"

namespace ppacf {

namespace {

constexpr int kIntervalGrid = 4096;
constexpr int kRectangleGridPerAxis = 256;
constexpr double kSupSafety = 1.001;

// Tabulated mu and phi on a dense grid; only used to bound the intensity
// from above for thinning.
struct BasisGrid {
    std::vector<Point> nodes;
    Eigen::VectorXd mu_vals;
    Eigen::MatrixXd phi_vals;  // p × G

    explicit BasisGrid(const BasisSpec& basis) {
        const Region& r = basis.region;
        if (r.kind() == RegionKind::interval) {
            nodes.reserve(kIntervalGrid);
            for (int i = 0; i < kIntervalGrid; ++i) {
                const double f =
                    static_cast<double>(i) / static_cast<double>(kIntervalGrid - 1);
                nodes.push_back({r.xlo() + f * (r.xhi() - r.xlo()), 0.0});
            }
            nodes.back().x = r.xhi();
        } else {
            const int g = kRectangleGridPerAxis;
            nodes.reserve(static_cast<std::size_t>(g) * g);
            for (int i = 0; i < g; ++i) {
                const double fx = static_cast<double>(i) / (g - 1);
                const double x = (i == g - 1) ? r.xhi()
                                              : r.xlo() + fx * (r.xhi() - r.xlo());
                for (int j = 0; j < g; ++j) {
                    const double fy = static_cast<double>(j) / (g - 1);
                    const double y = (j == g - 1)
                                         ? r.yhi()
                                         : r.ylo() + fy * (r.yhi() - r.ylo());
                    nodes.push_back({x, y});
                }
            }
        }
        const int p = basis.dim();
        const Eigen::Index g = static_cast<Eigen::Index>(nodes.size());
        mu_vals.resize(g);
        phi_vals.resize(p, g);
        for (Eigen::Index i = 0; i < g; ++i) {
            mu_vals[i] = basis.mu(nodes[static_cast<std::size_t>(i)]);
            for (int q = 0; q < p; ++q) {
                phi_vals(q, i) =
                    basis.phi[static_cast<std::size_t>(q)](nodes[static_cast<std::size_t>(i)]);
            }
        }
    }

    double log_sup(const Eigen::VectorXd& u) const {
        return (mu_vals + phi_vals.transpose() * u).maxCoeff();
    }
};

template <typename Engine>
Point uniform_point(const Region& r, Engine& engine) {
    std::uniform_real_distribution<double> ux(r.xlo(), r.xhi());
    Point p{ux(engine), 0.0};
    if (r.kind() == RegionKind::rectangle) {
        std::uniform_real_distribution<double> uy(r.ylo(), r.yhi());
        p.y = uy(engine);
    }
    return p;
}

PointPattern sample_pattern(const BasisSpec& basis, const BasisGrid& grid,
                            const Eigen::VectorXd& u, std::mt19937_64& engine) {
    const double lambda_max = std::exp(grid.log_sup(u)) * kSupSafety;
    if (!std::isfinite(lambda_max)) {
        throw numerical_error("non-finite intensity supremum in thinning sampler");
    }
    const Region& r = basis.region;
    std::poisson_distribution<int> count(lambda_max * r.measure());
    std::uniform_real_distribution<double> accept(0.0, 1.0);
    const int n_candidates = count(engine);
    std::vector<Point> kept;
    for (int i = 0; i < n_candidates; ++i) {
        const Point s = uniform_point(r, engine);
        const double lambda = intensity_at(basis, u, s);
        if (!std::isfinite(lambda)) {
            throw numerical_error("non-finite intensity during thinning");
        }
        if (accept(engine) * lambda_max < lambda) {
            kept.push_back(s);
        }
    }
    return PointPattern(r, std::move(kept));
}

}  // namespace

PointPattern sample_poisson(const BasisSpec& basis, const Eigen::VectorXd& u,
                            std::uint64_t seed) {
    const BasisGrid grid(basis);
    std::mt19937_64 engine(seed);
    return sample_pattern(basis, grid, u, engine);
}

PointPatternSeries simulate_series(const SimulationDesign& design) {
    design.latent.validate();
    if (design.n < 1) {
        throw invalid_argument("series length must be positive");
    }
    if (design.latent.dim() != design.basis.dim()) {
        throw invalid_argument("latent dimension does not match the basis dimension");
    }
    const int burn =
        design.burn_in ? *design.burn_in : default_burn_in(design.latent);
    const Eigen::MatrixXd u =
        simulate_latent(design.latent, design.n, burn,
                        substream_seed(design.seed, streams::latent, 0));

    const BasisGrid grid(design.basis);
    std::vector<PointPattern> patterns;
    patterns.reserve(static_cast<std::size_t>(design.n));
    for (int t = 0; t < design.n; ++t) {
        std::mt19937_64 engine(substream_seed(design.seed, streams::pattern,
                                              static_cast<std::uint64_t>(t)));
        patterns.push_back(
            sample_pattern(design.basis, grid, u.row(t).transpose(), engine));
    }
    return PointPatternSeries(std::move(patterns));
}

ExperimentReport run_experiment(const SimulationDesign& design,
                                const ExperimentConfig& config) {
    if (config.replicates < 1) {
        throw invalid_argument("experiment needs at least one replicate");
    }
    const BinGrid grid = make_bin_grid(design.basis.region, config.bins);
    const int K = config.max_lag;

    ExperimentReport report;
    report.n = design.n;
    report.rho_draws = Eigen::MatrixXd::Constant(
        config.replicates, K, std::numeric_limits<double>::quiet_NaN());
    report.rho_tilde.resize(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) {
        report.rho_tilde[static_cast<std::size_t>(k - 1)] =
            rho_tilde(design.latent, k);
    }

    Eigen::MatrixXi exceed = Eigen::MatrixXi::Zero(config.replicates, K);
    for (int r = 0; r < config.replicates; ++r) {
        SimulationDesign rep = design;
        rep.seed = substream_seed(config.seed, streams::replicate,
                                  static_cast<std::uint64_t>(r));
        try {
            const PointPatternSeries series = simulate_series(rep);
            const BinnedCountSeries y = bin_series(series, grid);
            Autocorrelogram acf = autocorrelogram(y, K);
            acf = attach_bounds(std::move(acf), y, config.alpha, config.mc_draws,
                                substream_seed(config.seed, streams::bounds,
                                               static_cast<std::uint64_t>(r)));
            for (int k = 0; k < K; ++k) {
                report.rho_draws(r, k) = acf.rho[static_cast<std::size_t>(k)];
                exceed(r, k) = acf.rho[static_cast<std::size_t>(k)] >
                                       (*acf.upper_bounds)[static_cast<std::size_t>(k)]
                                   ? 1
                                   : 0;
            }
        } catch (const numerical_error&) {
            ++report.failed_replicates;  // sparse-count degeneracy; keep going
        }
    }

    const int good = config.replicates - report.failed_replicates;
    report.mean_rho.assign(static_cast<std::size_t>(K), 0.0);
    report.mean_abs_err.assign(static_cast<std::size_t>(K), 0.0);
    report.exceed_rate.assign(static_cast<std::size_t>(K), 0.0);
    if (good > 0) {
        for (int k = 0; k < K; ++k) {
            double sum = 0.0, err = 0.0;
            int hits = 0;
            for (int r = 0; r < config.replicates; ++r) {
                const double v = report.rho_draws(r, k);
                if (std::isnan(v)) continue;
                sum += v;
                err += std::abs(v - report.rho_tilde[static_cast<std::size_t>(k)]);
                hits += exceed(r, k);
            }
            report.mean_rho[static_cast<std::size_t>(k)] = sum / good;
            report.mean_abs_err[static_cast<std::size_t>(k)] = err / good;
            report.exceed_rate[static_cast<std::size_t>(k)] =
                static_cast<double>(hits) / good;
        }
    }
    return report;
}

}  // namespace ppacf
