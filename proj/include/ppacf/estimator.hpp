#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "ppacf/binning.hpp"

namespace ppacf {

/// Handling of nonpositive entries in the covariance ratio matrix
/// C_k[j,j'] / (nu_j * nu_j') before the entrywise log. Default is a hard
/// numerical_error; setting `ratio_floor` clamps entries at that value
/// instead (exploratory use on sparse data).
struct GammaPolicy {
    std::optional<double> ratio_floor;
};

/// nu_hat = column means of Y.
Eigen::VectorXd mean_counts(const BinnedCountSeries& y);

/// C_hat_0 = (1/n) sum_t Y_t Y_t^T - diag(Ybar). Symmetric by construction;
/// the diagonal correction removes the Poisson count variance.
Eigen::MatrixXd autocov_c0(const BinnedCountSeries& y);

/// C_hat_k = (1/(n-k)) sum_{t=1}^{n-k} Y_t Y_{t+k}^T for 1 <= k <= n-1.
/// No diagonal correction; generally non-symmetric.
Eigen::MatrixXd autocov_ck(const BinnedCountSeries& y, int k);

/**
 * Gamma_hat_k: entrywise log of C_k[j,j'] / (nu_j * nu_j').
 *
 * Throws numerical_error when some nu_j <= 0 (degenerate bin) or, without a
 * ratio floor, when some ratio entry is nonpositive; messages name the
 * offending bin pair and, when provided, the lag.
 */
Eigen::MatrixXd gamma_hat(const Eigen::VectorXd& nu_hat,
                          const Eigen::MatrixXd& c_k,
                          const GammaPolicy& policy = {},
                          std::optional<int> lag = std::nullopt);

/// rho_hat_k = ||Gamma_k||_F / tr Gamma_0. The trace must exceed 1e-10 or a
/// degenerate-variance numerical_error is thrown. Reductions accumulate in
/// sorted order so the value is bit-identical under simultaneous bin
/// relabelings.
double rho_hat(const Eigen::MatrixXd& gamma_k, const Eigen::MatrixXd& gamma_0);

/// nu_hat plus C_hat_k for k = 0..max_lag.
struct MomentEstimates {
    Eigen::VectorXd nu_hat;
    std::vector<Eigen::MatrixXd> c_hat;  // c_hat[k]
    int n{0};
    int d{0};
};

MomentEstimates estimate_moments(const BinnedCountSeries& y, int max_lag);

struct GammaEstimates {
    std::vector<Eigen::MatrixXd> gamma_hat;  // gamma_hat[k], k = 0..max_lag
};

GammaEstimates estimate_gammas(const MomentEstimates& moments,
                               const GammaPolicy& policy = {});

struct AcfMeta {
    int n{0};
    int d{0};
    int max_lag{0};
    std::optional<double> alpha;          // set by attach_bounds
    std::optional<std::int64_t> mc_draws; // set by attach_bounds
    std::optional<std::uint64_t> seed;    // set by attach_bounds
};

/// Sample autocorrelogram: rho_hat_k for lags 1..K. Lag 0 feeds the trace
/// but is not reported. Upper bounds stay unset until attach_bounds.
struct Autocorrelogram {
    std::vector<double> rho;  // rho[k-1] is the coefficient at lag k
    double trace_gamma0{0.0};
    std::optional<std::vector<double>> upper_bounds;
    AcfMeta meta;
};

/// Full pipeline mean_counts -> autocov -> gamma_hat -> rho_hat for lags
/// 1..max_lag (1 <= max_lag <= n-1). Component errors are rethrown with the
/// failing lag named.
Autocorrelogram autocorrelogram(const BinnedCountSeries& y, int max_lag,
                                const GammaPolicy& policy = {});

}  // namespace ppacf
