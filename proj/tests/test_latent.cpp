#include <doctest.h>

#include <cmath>
#include <vector>

#include "ppacf/latent.hpp"

using namespace ppacf;

namespace {

double sample_autocorr(const Eigen::MatrixXd& u, int lag) {
    const int n = static_cast<int>(u.rows());
    const double mean = u.col(0).mean();
    double var = 0.0, cov = 0.0;
    for (int t = 0; t < n; ++t) {
        var += (u(t, 0) - mean) * (u(t, 0) - mean);
    }
    for (int t = 0; t < n - lag; ++t) {
        cov += (u(t, 0) - mean) * (u(t + lag, 0) - mean);
    }
    return cov / var;
}

}  // namespace

TEST_CASE("unit-variance noise normalization") {
    CHECK(unit_variance_noise(LatentFamily::ar1, 0.0) == 1.0);
    CHECK(unit_variance_noise(LatentFamily::ma1, 1.0) == doctest::Approx(0.5));
    CHECK(unit_variance_noise(LatentFamily::ar1, 0.75) ==
          doctest::Approx(0.4375));
    CHECK(unit_variance_noise(LatentFamily::sar1, 0.5) ==
          unit_variance_noise(LatentFamily::ar1, 0.5));
    CHECK(unit_variance_noise(LatentFamily::white_noise, 0.0) == 1.0);
    CHECK_THROWS_AS(unit_variance_noise(LatentFamily::ar1, 1.0),
                    invalid_argument);
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(LatentModelSpec::scalar(LatentFamily::ar1, 1.2, 1.0),
                    invalid_argument);
    CHECK_THROWS_AS(LatentModelSpec::scalar(LatentFamily::sar1, 0.5, 1.0, 1),
                    invalid_argument);
    CHECK_THROWS_AS(LatentModelSpec::scalar(LatentFamily::ma1, 1.0, -1.0),
                    invalid_argument);
    CHECK_NOTHROW(LatentModelSpec::scalar(LatentFamily::sma1, 1.0, 0.5, 5));
}

TEST_CASE("default burn-in follows the family rule") {
    CHECK(default_burn_in(LatentModelSpec::scalar(LatentFamily::white_noise,
                                                  0.0, 1.0)) == 0);
    CHECK(default_burn_in(LatentModelSpec::scalar(LatentFamily::ma1, 1.0,
                                                  0.5)) == 1);
    CHECK(default_burn_in(LatentModelSpec::scalar(LatentFamily::sma1, 1.0, 0.5,
                                                  5)) == 5);
    // smallest m with 0.75^m < 1e-8 is 65
    CHECK(default_burn_in(LatentModelSpec::scalar(LatentFamily::ar1, 0.75,
                                                  0.4375)) == 65);
    CHECK(default_burn_in(LatentModelSpec::scalar(LatentFamily::sar1, 0.75,
                                                  0.4375, 5)) == 325);
}

TEST_CASE("too-short autoregressive burn-in is rejected") {
    const auto spec = LatentModelSpec::scalar(LatentFamily::ar1, 0.75, 0.4375);
    CHECK_THROWS_AS(simulate_latent(spec, 10, 3, 1), invalid_argument);
    CHECK_NOTHROW(simulate_latent(spec, 10, 65, 1));
}

TEST_CASE("latent paths are deterministic given the seed") {
    const auto spec = LatentModelSpec::scalar(LatentFamily::ma1, 1.0, 0.5);
    const Eigen::MatrixXd a = simulate_latent(spec, 50, 1, 99);
    const Eigen::MatrixXd b = simulate_latent(spec, 50, 1, 99);
    CHECK(a == b);
    const Eigen::MatrixXd c = simulate_latent(spec, 50, 1, 100);
    CHECK(a != c);
}

TEST_CASE("white noise has no serial correlation") {
    const auto spec =
        LatentModelSpec::scalar(LatentFamily::white_noise, 0.0, 1.0);
    const Eigen::MatrixXd u = simulate_latent(spec, 100000, 0, 7);
    CHECK(std::abs(sample_autocorr(u, 1)) < 0.015);
    CHECK(std::abs(u.col(0).mean()) < 0.02);
}

TEST_CASE("AR(1) autocorrelations decay geometrically") {
    const auto spec = LatentModelSpec::scalar(LatentFamily::ar1, 0.75, 0.4375);
    const Eigen::MatrixXd u =
        simulate_latent(spec, 100000, default_burn_in(spec), 21);
    for (int k = 1; k <= 3; ++k) {
        CHECK(std::abs(sample_autocorr(u, k) - std::pow(0.75, k)) < 0.02);
    }
    // unit-variance normalization: sample variance near 1
    const double var = u.col(0).squaredNorm() / u.rows() -
                       u.col(0).mean() * u.col(0).mean();
    CHECK(var == doctest::Approx(1.0).epsilon(0.06));
}

TEST_CASE("MA(1) autocorrelation is b/(1+b^2) at lag one and zero after") {
    const auto spec = LatentModelSpec::scalar(LatentFamily::ma1, 1.0, 0.5);
    const Eigen::MatrixXd u = simulate_latent(spec, 100000, 1, 5);
    CHECK(sample_autocorr(u, 1) == doctest::Approx(0.5).epsilon(0.04));
    CHECK(std::abs(sample_autocorr(u, 2)) < 0.02);
}

TEST_CASE("seasonal paths correlate only at multiples of the period") {
    const auto sar = LatentModelSpec::scalar(LatentFamily::sar1, 0.6,
                                             1.0 - 0.36, 5);
    const Eigen::MatrixXd u =
        simulate_latent(sar, 80000, default_burn_in(sar), 13);
    CHECK(sample_autocorr(u, 5) == doctest::Approx(0.6).epsilon(0.05));
    CHECK(sample_autocorr(u, 10) == doctest::Approx(0.36).epsilon(0.1));
    for (int k : {1, 2, 3, 4, 6, 7}) {
        CHECK(std::abs(sample_autocorr(u, k)) < 0.02);
    }
}
