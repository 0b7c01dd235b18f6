#pragma once

#include <Eigen/Dense>

#include <functional>

#include "ppacf/basis.hpp"
#include "ppacf/binning.hpp"
#include "ppacf/latent.hpp"

namespace ppacf {

/// First- and second-order moment functions of a log-Gaussian intensity
/// process: nu(s) = exp{mu(s) + gamma_0(s,s)/2} and
/// c_k(s,s') = nu(s) nu(s') exp{gamma_k(s,s')}.
struct PopulationMoments {
    std::function<double(const Point&)> nu;
    std::function<double(int, const Point&, const Point&)> c_k;
    std::function<double(const Point&)> mu;
    std::function<double(int, const Point&, const Point&)> gamma_k;
    std::function<double(const Point&)> v0;  // gamma_0(s, s)
};

PopulationMoments moments_from_log_gaussian(
    std::function<double(const Point&)> mu,
    std::function<double(int, const Point&, const Point&)> gamma_k);

/// Inverse maps, entrywise: the log-process mean from (nu, c_0) and the
/// log-process autocovariance from (c_k, nu, nu').
double log_mean_from_moments(double nu_s, double c0_ss);
double log_autocov_from_moments(double ck_ssp, double nu_s, double nu_sp);

/// Sigma_k = E(U_t U_{t+k}^T) in closed form per family (k >= 0);
/// Sigma_{-k} = Sigma_k^T. AR Sigma_0 sums A^h V (A^h)^T until the term
/// norm drops below 1e-14.
Eigen::MatrixXd sigma_k(const LatentModelSpec& spec, int k);

/// Functional autocorrelation of the latent process:
/// rho_tilde_k = ||Sigma_k||_F / tr Sigma_0, k >= 1.
double rho_tilde(const LatentModelSpec& spec, int k);

/**
 * Binned population autocorrelation rho_k = ||Gamma_k||_F / tr Gamma_0 with
 * Gamma_k[j,j'] = log(C_k[j,j'] / (nu_j nu_j')), where nu_j and C_k[j,j']
 * integrate nu and c_k over the grid cells (gamma_k(s,s') =
 * phi(s)^T Sigma_k phi(s')).
 *
 * Quadrature: per-cell tensor-product composite Simpson, 513 points per
 * axis, with a doubling check at 1e-8 relative (one further doubling before
 * giving up with numerical_error). Interval regions only.
 */
double population_rho_k(const LatentModelSpec& spec, const BasisSpec& basis,
                        const BinGrid& grid, int k);

}  // namespace ppacf
