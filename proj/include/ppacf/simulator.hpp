#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "ppacf/basis.hpp"
#include "ppacf/latent.hpp"

namespace ppacf {

/// One simulation scenario: latent model + basis + series length. When
/// burn_in is unset, default_burn_in(latent) applies.
struct SimulationDesign {
    BasisSpec basis;
    LatentModelSpec latent;
    int n{0};
    std::optional<int> burn_in;
    std::uint64_t seed{0};
};

/// Inhomogeneous Poisson sample with intensity exp(mu + u^T phi) via
/// thinning: the dominating rate is the grid supremum of the log intensity
/// (4096 points for intervals, 256×256 for rectangles) times 1.001.
PointPattern sample_poisson(const BasisSpec& basis, const Eigen::VectorXd& u,
                            std::uint64_t seed);

/// Latent path, then one conditionally independent Poisson pattern per t.
/// Pattern t uses its own seed substream, so results do not depend on how
/// the per-t sampling is scheduled.
PointPatternSeries simulate_series(const SimulationDesign& design);

struct ExperimentConfig {
    int bins{5};
    int max_lag{10};
    int replicates{500};
    double alpha{0.10};
    std::uint64_t seed{0};
    std::int64_t mc_draws{20000};
};

/// Per-lag Monte-Carlo summaries over replicates. rho_draws holds every
/// replicate's autocorrelogram (NaN rows for the replicates whose estimator
/// degenerated; those are counted, not fatal).
struct ExperimentReport {
    Eigen::MatrixXd rho_draws;          // replicates × max_lag
    std::vector<double> rho_tilde;      // population values, lag 1..max_lag
    std::vector<double> mean_rho;
    std::vector<double> mean_abs_err;   // mean |rho_hat_k - rho_tilde_k|
    std::vector<double> exceed_rate;    // P(rho_hat_k > ub_alpha)
    int failed_replicates{0};
    int n{0};
};

/// Runs `replicates` independent simulate -> bin -> autocorrelogram ->
/// attach_bounds pipelines with per-replicate seed substreams and collects
/// detection statistics.
ExperimentReport run_experiment(const SimulationDesign& design,
                                const ExperimentConfig& config);

}  // namespace ppacf
