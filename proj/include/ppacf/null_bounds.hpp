#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "ppacf/estimator.hpp"

namespace ppacf {

/// Inputs of the quadratic-form limit law for n * rho_hat_k^2 under the
/// independence null: per-bin means nu, the count covariance Omega11 =
/// E[(Y - nu)(Y - nu)^T], the trace of Gamma_0, and the series length.
struct NullDistParams {
    Eigen::VectorXd nu;
    Eigen::MatrixXd omega11;
    double trace_gamma0{0.0};
    int n{0};
};

/// Estimates nu and Omega11 from the count matrix (sample mean and sample
/// covariance with 1/n normalization).
NullDistParams estimate_null_params(const BinnedCountSeries& y,
                                    double trace_gamma0);

/// B = [B1 | B2], d^2 × (d + d^2), with
///   B1 = -(1_d ⊗ diag(nu^-1)) - (diag(nu^-1) ⊗ 1_d),
///   B2 = diag(nu^-1 ⊗ nu^-1).
/// Kronecker products use the row-pairing convention of linalg.hpp; B and
/// Omega must share it or the quadratic form silently changes.
Eigen::MatrixXd build_B(const Eigen::VectorXd& nu);

/// Omega, (d + d^2) × (d + d^2), with blocks
///   Omega12 = nu^T ⊗ Omega11 + Omega11 ⊗ nu^T,
///   Omega22 = Omega11⊗Omega11 + Omega11⊗nu nu^T + nu nu^T⊗Omega11
///           + (nu⊗I_d) Omega11 (I_d⊗nu^T) + (I_d⊗nu) Omega11 (nu^T⊗I_d),
/// and Omega21 = Omega12^T. Omega11 must be symmetric to 1e-10.
Eigen::MatrixXd build_Omega(const Eigen::VectorXd& nu,
                            const Eigen::MatrixXd& omega11);

/**
 * Sampler for the null statistic Z^T B Omega B^T Z / (tr Gamma_0)^2 with
 * Z ~ N(0, I_{d^2}).
 *
 * Construction eigendecomposes the symmetric d^2 × d^2 matrix
 * scale * B Omega B^T and clips negative eigenvalues at zero (sample
 * covariance noise can make the assembled Omega indefinite). A draw is then
 * sum_i lambda_i * chi^2_1. If the clipped mass exceeds 1e-8 of the trace a
 * warning is printed to stderr.
 */
class QuadFormSampler {
public:
    explicit QuadFormSampler(const NullDistParams& params);

    /// One draw, fully determined by the seed.
    double sample(std::uint64_t seed) const;

    /// Eigenvalues of scale * B Omega B^T after clipping, descending.
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

    /// Fraction of |trace| removed by eigenvalue clipping.
    double clipped_trace_fraction() const { return clipped_fraction_; }

    int n() const { return n_; }

private:
    Eigen::VectorXd eigenvalues_;
    double clipped_fraction_{0.0};
    int n_{0};
};

/// One draw of the null statistic.
double sample_null_statistic(const QuadFormSampler& sampler,
                             std::uint64_t seed);

/**
 * Monte-Carlo upper confidence bound for rho_hat_k under independence:
 * sqrt(q_{1-alpha} / n) where q is the empirical (1-alpha) quantile of
 * mc_draws statistics. Deterministic given the seed; the same bound applies
 * to every lag k >= 1 because the limit law does not depend on k.
 */
double null_quantile(const NullDistParams& params, double alpha,
                     std::int64_t mc_draws, std::uint64_t seed);

/// Estimates the null parameters from Y, computes the common bound, and
/// returns the autocorrelogram with upper_bounds filled for every lag.
Autocorrelogram attach_bounds(Autocorrelogram acf, const BinnedCountSeries& y,
                              double alpha, std::int64_t mc_draws,
                              std::uint64_t seed);

}  // namespace ppacf
