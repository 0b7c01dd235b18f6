#include "ppacf/latent.hpp"

#include <cmath>
#include <random>
#include <string>

namespace ppacf {

bool is_autoregressive(LatentFamily f) {
    return f == LatentFamily::ar1 || f == LatentFamily::sar1;
}

bool is_moving_average(LatentFamily f) {
    return f == LatentFamily::ma1 || f == LatentFamily::sma1;
}

bool is_seasonal(LatentFamily f) {
    return f == LatentFamily::sar1 || f == LatentFamily::sma1;
}

const char* family_name(LatentFamily f) {
    switch (f) {
        case LatentFamily::white_noise: return "wn";
        case LatentFamily::ar1: return "ar1";
        case LatentFamily::ma1: return "ma1";
        case LatentFamily::sar1: return "sar1";
        case LatentFamily::sma1: return "sma1";
    }
    return "?";
}

void LatentModelSpec::validate() const {
    const int p = dim();
    if (p < 1) {
        throw invalid_argument("latent dimension must be at least 1");
    }
    if (noise_cov.rows() != noise_cov.cols() ||
        (noise_cov - noise_cov.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw invalid_argument("noise covariance V must be square and symmetric");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(noise_cov);
    if (llt.info() != Eigen::Success) {
        throw invalid_argument("noise covariance V must be positive definite");
    }
    if (family != LatentFamily::white_noise) {
        if (coeff.rows() != p || coeff.cols() != p) {
            throw invalid_argument("coefficient matrix must be p×p");
        }
        if (is_autoregressive(family) && !(coeff.norm() < 1.0)) {
            throw invalid_argument("autoregressive coefficient needs ||A||_F < 1, got " +
                                   std::to_string(coeff.norm()));
        }
    }
    if (is_seasonal(family)) {
        if (period < 2) {
            throw invalid_argument("seasonal period tau must be at least 2");
        }
    } else if (period != 1) {
        throw invalid_argument("non-seasonal families must have period 1");
    }
}

LatentModelSpec LatentModelSpec::scalar(LatentFamily family, double coeff,
                                        double v, int tau) {
    LatentModelSpec spec;
    spec.family = family;
    spec.coeff = Eigen::MatrixXd::Constant(1, 1, coeff);
    spec.noise_cov = Eigen::MatrixXd::Constant(1, 1, v);
    spec.period = is_seasonal(family) ? tau : 1;
    spec.validate();
    return spec;
}

double unit_variance_noise(LatentFamily family, double coeff) {
    if (family == LatentFamily::white_noise) return 1.0;
    if (is_autoregressive(family)) {
        if (!(std::abs(coeff) < 1.0)) {
            throw invalid_argument("|a| must be below 1 for autoregressive models");
        }
        return 1.0 - coeff * coeff;
    }
    return 1.0 / (1.0 + coeff * coeff);
}

int default_burn_in(const LatentModelSpec& spec) {
    if (spec.family == LatentFamily::white_noise) return 0;
    if (is_moving_average(spec.family)) return spec.period;
    // smallest m with ||A||_F^m < 1e-8, scaled by the period
    const double norm = spec.coeff.norm();
    int m = 1;
    double pow = norm;
    while (pow >= 1e-8 && m < 10000) {
        pow *= norm;
        ++m;
    }
    return m * spec.period;
}

Eigen::MatrixXd simulate_latent(const LatentModelSpec& spec, int n,
                                int burn_in, std::uint64_t seed) {
    spec.validate();
    if (n < 1) {
        throw invalid_argument("latent path length must be positive");
    }
    if (burn_in < 0) {
        throw invalid_argument("burn-in must be nonnegative");
    }
    if (is_autoregressive(spec.family)) {
        const double decay = std::pow(
            spec.coeff.norm(),
            std::ceil(static_cast<double>(burn_in) / spec.period));
        if (!(decay < 1e-8)) {
            throw invalid_argument(
                "burn-in too short for stationarity: ||A||_F^(burn_in/tau) = " +
                std::to_string(decay));
        }
    }

    const int p = spec.dim();
    const int total = burn_in + n;
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    const Eigen::MatrixXd chol =
        Eigen::LLT<Eigen::MatrixXd>(spec.noise_cov).matrixL();
    const bool scalar_path = (p == 1);
    const double sd = scalar_path ? std::sqrt(spec.noise_cov(0, 0)) : 0.0;
    auto draw_noise = [&]() -> Eigen::VectorXd {
        if (scalar_path) {
            return Eigen::VectorXd::Constant(1, sd * normal(engine));
        }
        Eigen::VectorXd z(p);
        for (int i = 0; i < p; ++i) z[i] = normal(engine);
        return chol * z;
    };

    const int tau = spec.period;
    Eigen::MatrixXd out(n, p);
    // ring buffers over the last tau states / noises, zero initial state
    Eigen::MatrixXd u_hist = Eigen::MatrixXd::Zero(tau, p);
    Eigen::MatrixXd z_hist = Eigen::MatrixXd::Zero(tau, p);
    for (int t = 0; t < total; ++t) {
        const int slot = t % tau;
        const Eigen::VectorXd z = draw_noise();
        Eigen::VectorXd u;
        switch (spec.family) {
            case LatentFamily::white_noise:
                u = z;
                break;
            case LatentFamily::ar1:
            case LatentFamily::sar1:
                u = spec.coeff * u_hist.row(slot).transpose() + z;
                break;
            case LatentFamily::ma1:
            case LatentFamily::sma1:
                u = z + spec.coeff * z_hist.row(slot).transpose();
                break;
        }
        u_hist.row(slot) = u.transpose();
        z_hist.row(slot) = z.transpose();
        if (t >= burn_in) {
            out.row(t - burn_in) = u.transpose();
        }
    }
    return out;
}

}  // namespace ppacf
