#include "ppacf/null_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ppacf/errors.hpp"
#include "ppacf/linalg.hpp"
#include "ppacf/rng.hpp"

namespace ppacf {

namespace {

void check_nu_positive(const Eigen::VectorXd& nu) {
    for (Eigen::Index j = 0; j < nu.size(); ++j) {
        if (!(nu[j] > 0.0)) {
            throw invalid_argument("nu must be positive componentwise; entry " +
                                   std::to_string(j) + " is " +
                                   std::to_string(nu[j]));
        }
    }
}

void check_symmetric(const Eigen::MatrixXd& m, const char* name) {
    if (m.rows() != m.cols() ||
        (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw invalid_argument(std::string(name) + " must be symmetric");
    }
}

// Empirical quantile with linear interpolation between order statistics.
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t m = sorted.size();
    const double h = p * static_cast<double>(m - 1);
    const std::size_t f = static_cast<std::size_t>(h);
    if (f + 1 >= m) return sorted.back();
    return sorted[f] + (h - static_cast<double>(f)) * (sorted[f + 1] - sorted[f]);
}

}  // namespace

NullDistParams estimate_null_params(const BinnedCountSeries& y,
                                    double trace_gamma0) {
    const int n = y.length();
    if (n < 2) {
        throw invalid_argument("null parameter estimation needs n >= 2");
    }
    NullDistParams p;
    p.n = n;
    p.trace_gamma0 = trace_gamma0;
    p.nu = mean_counts(y);
    const Eigen::MatrixXd centered =
        y.counts.cast<double>().rowwise() - p.nu.transpose();
    p.omega11 = centered.transpose() * centered / static_cast<double>(n);
    return p;
}

Eigen::MatrixXd build_B(const Eigen::VectorXd& nu) {
    check_nu_positive(nu);
    const Eigen::Index d = nu.size();
    const Eigen::VectorXd ninv = nu.cwiseInverse();
    const Eigen::MatrixXd dinv = ninv.asDiagonal();
    const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(d, 1);

    Eigen::MatrixXd b(d * d, d + d * d);
    b.leftCols(d) = -kron(ones, dinv) - kron(dinv, ones);
    b.rightCols(d * d) =
        Eigen::MatrixXd(Eigen::VectorXd(kron(ninv, ninv)).asDiagonal());
    return b;
}

Eigen::MatrixXd build_Omega(const Eigen::VectorXd& nu,
                            const Eigen::MatrixXd& omega11) {
    check_symmetric(omega11, "Omega11");
    if (omega11.rows() != nu.size()) {
        throw invalid_argument("Omega11 dimension does not match nu");
    }
    const Eigen::Index d = nu.size();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
    const Eigen::MatrixXd nnt = nu * nu.transpose();

    const Eigen::MatrixXd o12 =
        kron(nu.transpose(), omega11) + kron(omega11, nu.transpose());
    const Eigen::MatrixXd o22 =
        kron(omega11, omega11) + kron(omega11, nnt) + kron(nnt, omega11) +
        kron(nu, id) * omega11 * kron(id, nu.transpose()) +
        kron(id, nu) * omega11 * kron(nu.transpose(), id);

    Eigen::MatrixXd omega(d + d * d, d + d * d);
    omega.topLeftCorner(d, d) = omega11;
    omega.topRightCorner(d, d * d) = o12;
    omega.bottomLeftCorner(d * d, d) = o12.transpose();
    omega.bottomRightCorner(d * d, d * d) = o22;
    return omega;
}

QuadFormSampler::QuadFormSampler(const NullDistParams& params) {
    if (params.n < 1) {
        throw invalid_argument("series length must be positive");
    }
    if (!(params.trace_gamma0 > 0.0)) {
        throw numerical_error("degenerate variance: tr Gamma_0 must be positive");
    }
    n_ = params.n;

    const Eigen::MatrixXd b = build_B(params.nu);
    const Eigen::MatrixXd omega = build_Omega(params.nu, params.omega11);
    const double scale = 1.0 / (params.trace_gamma0 * params.trace_gamma0);
    Eigen::MatrixXd m = scale * (b * omega * b.transpose());
    m = 0.5 * (m + m.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("eigendecomposition of the quadratic-form matrix failed");
    }
    Eigen::VectorXd lambda = solver.eigenvalues();
    double clipped = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0.0) {
            clipped -= lambda[i];
            lambda[i] = 0.0;
        }
    }
    const double trace = m.trace();
    clipped_fraction_ = trace > 0.0 ? clipped / trace : (clipped > 0.0 ? 1.0 : 0.0);
    if (clipped_fraction_ > 1e-8) {
        std::cerr << "warning: clipped " << clipped_fraction_
                  << " of the null quadratic-form trace (indefinite estimate)\n";
    }
    eigenvalues_ = lambda.reverse();
}

double QuadFormSampler::sample(std::uint64_t seed) const {
    SplitMix64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
        const double z = normal(engine);
        acc += eigenvalues_[i] * z * z;
    }
    return acc;
}

double sample_null_statistic(const QuadFormSampler& sampler,
                             std::uint64_t seed) {
    return sampler.sample(seed);
}

double null_quantile(const NullDistParams& params, double alpha,
                     std::int64_t mc_draws, std::uint64_t seed) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw invalid_argument("alpha must lie in (0, 1)");
    }
    if (mc_draws < 1000) {
        throw invalid_argument("mc_draws must be at least 1000");
    }
    const QuadFormSampler sampler(params);
    std::vector<double> stats(static_cast<std::size_t>(mc_draws));
    for (std::int64_t i = 0; i < mc_draws; ++i) {
        stats[static_cast<std::size_t>(i)] =
            sampler.sample(substream_seed(seed, streams::quadform,
                                          static_cast<std::uint64_t>(i)));
    }
    std::sort(stats.begin(), stats.end());
    const double q = quantile_sorted(stats, 1.0 - alpha);
    return std::sqrt(q / static_cast<double>(params.n));
}

Autocorrelogram attach_bounds(Autocorrelogram acf, const BinnedCountSeries& y,
                              double alpha, std::int64_t mc_draws,
                              std::uint64_t seed) {
    if (acf.meta.n != y.length() || acf.meta.d != y.bins()) {
        throw invalid_argument("autocorrelogram metadata does not match the count series");
    }
    const NullDistParams params = estimate_null_params(y, acf.trace_gamma0);
    const double ub = null_quantile(params, alpha, mc_draws, seed);
    acf.upper_bounds = std::vector<double>(acf.rho.size(), ub);
    acf.meta.alpha = alpha;
    acf.meta.mc_draws = mc_draws;
    acf.meta.seed = seed;
    return acf;
}

}  // namespace ppacf
