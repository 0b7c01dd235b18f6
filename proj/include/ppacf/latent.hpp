#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "ppacf/errors.hpp"

namespace ppacf {

/// Latent time-series families for the log-intensity coefficients U_t:
///   white_noise: U_t = Z_t
///   ar1:  U_t = A U_{t-1} + Z_t          (requires ||A||_F < 1)
///   ma1:  U_t = Z_t + B Z_{t-1}
///   sar1: U_t = A U_{t-tau} + Z_t        (requires ||A||_F < 1)
///   sma1: U_t = Z_t + B Z_{t-tau}
/// with Z_t i.i.d. N(0, V).
enum class LatentFamily { white_noise, ar1, ma1, sar1, sma1 };

bool is_autoregressive(LatentFamily f);
bool is_moving_average(LatentFamily f);
bool is_seasonal(LatentFamily f);
const char* family_name(LatentFamily f);

struct LatentModelSpec {
    LatentFamily family{LatentFamily::white_noise};
    Eigen::MatrixXd coeff;      // A or B; ignored for white noise
    Eigen::MatrixXd noise_cov;  // V, symmetric positive definite
    int period{1};              // tau; 1 for non-seasonal families

    int dim() const { return static_cast<int>(noise_cov.rows()); }

    /// Throws invalid_argument on violated invariants (||A||_F >= 1,
    /// non-SPD V, tau < 2 for seasonal families).
    void validate() const;

    /// Convenience p = 1 constructor. `tau` is required (and >= 2) for the
    /// seasonal families and must be omitted otherwise.
    static LatentModelSpec scalar(LatentFamily family, double coeff, double v,
                                  int tau = 1);
};

/// White-noise variance that keeps the marginal latent variance sigma_0 at
/// 1 for the scalar families: 1 - a^2 for AR/SAR, 1/(1 + b^2) for MA/SMA,
/// 1 for white noise.
double unit_variance_noise(LatentFamily family, double coeff);

/// Default warm-up: 0 for white noise, tau for the moving-average families
/// (one lag of Z history), and the smallest multiple m*tau of the period
/// with ||A||_F^m < 1e-8 for the autoregressive ones.
int default_burn_in(const LatentModelSpec& spec);

/// Stationary sample path of length n (rows are time): burn_in + n steps
/// from a zero initial state, first burn_in discarded. Deterministic given
/// the seed.
Eigen::MatrixXd simulate_latent(const LatentModelSpec& spec, int n,
                                int burn_in, std::uint64_t seed);

}  // namespace ppacf
