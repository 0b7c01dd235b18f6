#include "ppacf/theory.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ppacf/linalg.hpp"
#include "ppacf/quadrature.hpp"

namespace ppacf {

PopulationMoments moments_from_log_gaussian(
    std::function<double(const Point&)> mu,
    std::function<double(int, const Point&, const Point&)> gamma_k) {
    PopulationMoments m;
    m.mu = mu;
    m.gamma_k = gamma_k;
    m.v0 = [gamma_k](const Point& s) { return gamma_k(0, s, s); };
    m.nu = [mu, gamma_k](const Point& s) {
        return std::exp(mu(s) + 0.5 * gamma_k(0, s, s));
    };
    auto nu = m.nu;
    m.c_k = [nu, gamma_k](int k, const Point& s, const Point& sp) {
        return nu(s) * nu(sp) * std::exp(gamma_k(k, s, sp));
    };
    return m;
}

double log_mean_from_moments(double nu_s, double c0_ss) {
    return 2.0 * std::log(nu_s) - 0.5 * std::log(c0_ss);
}

double log_autocov_from_moments(double ck_ssp, double nu_s, double nu_sp) {
    return std::log(ck_ssp / (nu_s * nu_sp));
}

Eigen::MatrixXd sigma_k(const LatentModelSpec& spec, int k) {
    spec.validate();
    if (k < 0) {
        throw invalid_argument("sigma_k is defined for k >= 0 (use Sigma_{-k} = Sigma_k^T)");
    }
    const int p = spec.dim();
    const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(p, p);
    const Eigen::MatrixXd& v = spec.noise_cov;

    switch (spec.family) {
        case LatentFamily::white_noise:
            return k == 0 ? v : zero;
        case LatentFamily::ma1:
        case LatentFamily::sma1: {
            const int tau = spec.period;
            if (k == 0) return v + spec.coeff * v * spec.coeff.transpose();
            if (k == tau) return v * spec.coeff.transpose();
            return zero;
        }
        case LatentFamily::ar1:
        case LatentFamily::sar1: {
            const int tau = spec.period;
            // Sigma_0 = sum_h A^h V (A^h)^T, truncated at term norm 1e-14
            Eigen::MatrixXd sigma0 = v;
            Eigen::MatrixXd term = v;
            for (int h = 0; h < 100000; ++h) {
                term = spec.coeff * term * spec.coeff.transpose();
                sigma0 += term;
                if (term.norm() < 1e-14 * std::max(1.0, sigma0.norm())) break;
            }
            if (k == 0) return sigma0;
            if (k % tau != 0) return zero;
            Eigen::MatrixXd apow = Eigen::MatrixXd::Identity(p, p);
            for (int h = 0; h < k / tau; ++h) apow = spec.coeff * apow;
            return sigma0 * apow.transpose();
        }
    }
    return zero;
}

double rho_tilde(const LatentModelSpec& spec, int k) {
    if (k < 1) {
        throw invalid_argument("rho_tilde is defined for k >= 1");
    }
    const double trace0 = sigma_k(spec, 0).trace();
    return sigma_k(spec, k).norm() / trace0;
}

namespace {

// Simpson nodes/weights plus tabulated nu and phi over one grid cell.
struct CellTable {
    std::vector<double> weighted_nu;  // w_i * nu(s_i)
    Eigen::MatrixXd phi;              // p × m
    double nu_integral{0.0};
};

CellTable tabulate_cell(const BasisSpec& basis, const Eigen::MatrixXd& sigma0,
                        double lo, double hi, int points) {
    const SimpsonRule rule = SimpsonRule::over(lo, hi, points);
    const int p = basis.dim();
    CellTable cell;
    cell.weighted_nu.resize(rule.nodes.size());
    cell.phi.resize(p, static_cast<Eigen::Index>(rule.nodes.size()));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Point s{rule.nodes[i], 0.0};
        Eigen::VectorXd phis(p);
        for (int q = 0; q < p; ++q) phis[q] = basis.phi[static_cast<std::size_t>(q)](s);
        cell.phi.col(static_cast<Eigen::Index>(i)) = phis;
        const double v0 = phis.dot(sigma0 * phis);
        const double nu = std::exp(basis.mu(s) + 0.5 * v0);
        cell.weighted_nu[i] = rule.weights[i] * nu;
        cell.nu_integral += rule.weights[i] * nu;
    }
    return cell;
}

// C_{k,jj'} = sum_a sum_b (w_a nu_a)(w_b nu_b) exp(phi_a^T Sigma_k phi_b)
double cell_pair_integral(const CellTable& a, const CellTable& b,
                          const Eigen::MatrixXd& sigma) {
    const Eigen::MatrixXd cross = a.phi.transpose() * sigma * b.phi;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < cross.rows(); ++i) {
        double inner = 0.0;
        for (Eigen::Index j = 0; j < cross.cols(); ++j) {
            inner += b.weighted_nu[static_cast<std::size_t>(j)] *
                     std::exp(cross(i, j));
        }
        acc += a.weighted_nu[static_cast<std::size_t>(i)] * inner;
    }
    return acc;
}

double binned_rho_at_resolution(const LatentModelSpec& spec,
                                const BasisSpec& basis, const BinGrid& grid,
                                int k, int points) {
    const int d = grid.cell_count();
    const Eigen::MatrixXd sigma0 = sigma_k(spec, 0);
    const Eigen::MatrixXd sigmak = sigma_k(spec, k);

    std::vector<CellTable> cells;
    cells.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const Region cell = grid.cell(j);
        cells.push_back(
            tabulate_cell(basis, sigma0, cell.xlo(), cell.xhi(), points));
    }

    Eigen::MatrixXd gamma0(d, d), gammak(d, d);
    for (int j = 0; j < d; ++j) {
        for (int jp = 0; jp < d; ++jp) {
            const double nn = cells[static_cast<std::size_t>(j)].nu_integral *
                              cells[static_cast<std::size_t>(jp)].nu_integral;
            gamma0(j, jp) = std::log(
                cell_pair_integral(cells[static_cast<std::size_t>(j)],
                                   cells[static_cast<std::size_t>(jp)], sigma0) /
                nn);
            gammak(j, jp) = std::log(
                cell_pair_integral(cells[static_cast<std::size_t>(j)],
                                   cells[static_cast<std::size_t>(jp)], sigmak) /
                nn);
        }
    }
    return gammak.norm() / gamma0.trace();
}

}  // namespace

double population_rho_k(const LatentModelSpec& spec, const BasisSpec& basis,
                        const BinGrid& grid, int k) {
    if (k < 1) {
        throw invalid_argument("population rho_k is defined for k >= 1");
    }
    if (grid.region().kind() != RegionKind::interval) {
        throw invalid_argument(
            "binned population autocorrelations are implemented for interval regions only");
    }
    if (!(grid.region() == basis.region)) {
        throw invalid_argument("grid region does not match the basis region");
    }
    spec.validate();
    if (spec.dim() != basis.dim()) {
        throw invalid_argument("latent dimension does not match the basis dimension");
    }

    int points = 513;
    double coarse = binned_rho_at_resolution(spec, basis, grid, k, points);
    for (int round = 0; round < 2; ++round) {
        points = 2 * points - 1;
        const double fine = binned_rho_at_resolution(spec, basis, grid, k, points);
        if (std::abs(fine - coarse) <= 1e-8 * std::max(1.0, std::abs(fine))) {
            return fine;
        }
        coarse = fine;
    }
    throw numerical_error("cell quadrature did not converge at 1e-8 relative");
}

}  // namespace ppacf
