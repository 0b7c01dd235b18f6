#include "ppacf/estimator.hpp"

#include <cmath>
#include <string>

#include "ppacf/errors.hpp"
#include "ppacf/linalg.hpp"

namespace ppacf {

namespace {

constexpr double kTraceFloor = 1e-10;

// Pairwise accumulation of sum_{t in [lo, hi)} Y_t Y_{t+k}^T.
Eigen::MatrixXd outer_sum(const Eigen::MatrixXi& y, int k, int lo, int hi) {
    const int d = static_cast<int>(y.cols());
    if (hi - lo <= 16) {
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(d, d);
        for (int t = lo; t < hi; ++t) {
            acc.noalias() += y.row(t).cast<double>().transpose() *
                             y.row(t + k).cast<double>();
        }
        return acc;
    }
    const int mid = lo + (hi - lo) / 2;
    return outer_sum(y, k, lo, mid) + outer_sum(y, k, mid, hi);
}

std::string lag_prefix(std::optional<int> lag) {
    return lag ? "lag " + std::to_string(*lag) + ": " : std::string();
}

}  // namespace

Eigen::VectorXd mean_counts(const BinnedCountSeries& y) {
    if (y.length() < 1) {
        throw invalid_argument("count series must have at least one row");
    }
    return y.counts.cast<double>().colwise().sum().transpose() /
           static_cast<double>(y.length());
}

Eigen::MatrixXd autocov_c0(const BinnedCountSeries& y) {
    const int n = y.length();
    const Eigen::VectorXd nu = mean_counts(y);
    Eigen::MatrixXd c0 = outer_sum(y.counts, 0, 0, n) / static_cast<double>(n);
    c0 -= nu.asDiagonal().toDenseMatrix();
    return c0;
}

Eigen::MatrixXd autocov_ck(const BinnedCountSeries& y, int k) {
    const int n = y.length();
    if (k < 1 || k >= n) {
        throw invalid_argument("lag must satisfy 1 <= k <= n-1, got k=" +
                               std::to_string(k) + " with n=" +
                               std::to_string(n));
    }
    return outer_sum(y.counts, k, 0, n - k) / static_cast<double>(n - k);
}

Eigen::MatrixXd gamma_hat(const Eigen::VectorXd& nu_hat,
                          const Eigen::MatrixXd& c_k,
                          const GammaPolicy& policy, std::optional<int> lag) {
    const Eigen::Index d = nu_hat.size();
    if (c_k.rows() != d || c_k.cols() != d) {
        throw invalid_argument("covariance matrix shape does not match nu");
    }
    for (Eigen::Index j = 0; j < d; ++j) {
        if (!(nu_hat[j] > 0.0)) {
            throw numerical_error(lag_prefix(lag) + "degenerate bin " +
                                  std::to_string(j) +
                                  ": estimated mean count is not positive");
        }
    }
    Eigen::MatrixXd gamma(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index jp = 0; jp < d; ++jp) {
            double ratio = c_k(j, jp) / (nu_hat[j] * nu_hat[jp]);
            if (policy.ratio_floor) {
                ratio = std::max(ratio, *policy.ratio_floor);
            } else if (!(ratio > 0.0)) {
                throw numerical_error(
                    lag_prefix(lag) + "nonpositive covariance ratio at bins (" +
                    std::to_string(j) + ", " + std::to_string(jp) + ")");
            }
            gamma(j, jp) = std::log(ratio);
        }
    }
    return gamma;
}

double rho_hat(const Eigen::MatrixXd& gamma_k,
               const Eigen::MatrixXd& gamma_0) {
    const Eigen::Index d = gamma_0.rows();
    if (gamma_0.cols() != d || gamma_k.rows() != d || gamma_k.cols() != d) {
        throw invalid_argument("gamma matrices must be square and same size");
    }
    std::vector<double> diag(static_cast<std::size_t>(d));
    for (Eigen::Index j = 0; j < d; ++j) diag[static_cast<std::size_t>(j)] = gamma_0(j, j);
    const double trace = sum_sorted(std::move(diag));
    if (!(trace > kTraceFloor)) {
        throw numerical_error(
            "degenerate variance: tr Gamma_0 = " + std::to_string(trace) +
            " is not positive");
    }
    std::vector<double> squares;
    squares.reserve(static_cast<std::size_t>(d * d));
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index jp = 0; jp < d; ++jp) {
            squares.push_back(gamma_k(j, jp) * gamma_k(j, jp));
        }
    }
    return std::sqrt(sum_sorted(std::move(squares))) / trace;
}

MomentEstimates estimate_moments(const BinnedCountSeries& y, int max_lag) {
    const int n = y.length();
    if (max_lag < 0 || max_lag >= n) {
        throw invalid_argument("max lag must satisfy 0 <= K <= n-1");
    }
    MomentEstimates m;
    m.n = n;
    m.d = y.bins();
    m.nu_hat = mean_counts(y);
    m.c_hat.reserve(static_cast<std::size_t>(max_lag) + 1);
    m.c_hat.push_back(autocov_c0(y));
    for (int k = 1; k <= max_lag; ++k) {
        m.c_hat.push_back(autocov_ck(y, k));
    }
    return m;
}

GammaEstimates estimate_gammas(const MomentEstimates& moments,
                               const GammaPolicy& policy) {
    GammaEstimates g;
    g.gamma_hat.reserve(moments.c_hat.size());
    for (std::size_t k = 0; k < moments.c_hat.size(); ++k) {
        g.gamma_hat.push_back(gamma_hat(moments.nu_hat, moments.c_hat[k],
                                        policy, static_cast<int>(k)));
    }
    return g;
}

Autocorrelogram autocorrelogram(const BinnedCountSeries& y, int max_lag,
                                const GammaPolicy& policy) {
    const int n = y.length();
    if (max_lag < 1 || max_lag >= n) {
        throw invalid_argument("max lag must satisfy 1 <= K <= n-1, got K=" +
                               std::to_string(max_lag) + " with n=" +
                               std::to_string(n));
    }
    const MomentEstimates moments = estimate_moments(y, max_lag);
    const Eigen::MatrixXd gamma0 =
        gamma_hat(moments.nu_hat, moments.c_hat[0], policy, 0);

    Autocorrelogram acf;
    acf.meta.n = n;
    acf.meta.d = y.bins();
    acf.meta.max_lag = max_lag;
    acf.rho.reserve(static_cast<std::size_t>(max_lag));
    for (int k = 1; k <= max_lag; ++k) {
        const Eigen::MatrixXd gk =
            gamma_hat(moments.nu_hat, moments.c_hat[static_cast<std::size_t>(k)],
                      policy, k);
        acf.rho.push_back(rho_hat(gk, gamma0));
    }
    // tr Gamma_0 was validated positive inside rho_hat
    std::vector<double> diag(static_cast<std::size_t>(y.bins()));
    for (int j = 0; j < y.bins(); ++j) diag[static_cast<std::size_t>(j)] = gamma0(j, j);
    acf.trace_gamma0 = sum_sorted(std::move(diag));
    return acf;
}

}  // namespace ppacf
