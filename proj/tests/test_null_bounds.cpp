#include <doctest.h>

#include <cmath>
#include <random>

#include "ppacf/null_bounds.hpp"
#include "ppacf/rng.hpp"

using namespace ppacf;

namespace {

// Element-indexed constructions straight from the block definitions, kept
// independent of the kron() helper on purpose. 0-based: a d^2 index r pairs
// as r = i*d + k.
Eigen::MatrixXd indexed_B(const Eigen::VectorXd& nu) {
    const int d = static_cast<int>(nu.size());
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(d * d, d + d * d);
    for (int r = 0; r < d * d; ++r) {
        const int i = r / d;
        const int k = r % d;
        b(r, k) += -1.0 / nu[k];
        b(r, i) += -1.0 / nu[i];
        b(r, d + r) = 1.0 / (nu[i] * nu[k]);
    }
    return b;
}

Eigen::MatrixXd indexed_Omega(const Eigen::VectorXd& nu,
                              const Eigen::MatrixXd& o11) {
    const int d = static_cast<int>(nu.size());
    Eigen::MatrixXd omega(d + d * d, d + d * d);
    omega.topLeftCorner(d, d) = o11;
    for (int r = 0; r < d; ++r) {
        for (int j = 0; j < d; ++j) {
            for (int l = 0; l < d; ++l) {
                omega(r, d + j * d + l) = nu[j] * o11(r, l) + o11(r, j) * nu[l];
            }
        }
    }
    omega.bottomLeftCorner(d * d, d) =
        omega.topRightCorner(d, d * d).transpose();
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            for (int j = 0; j < d; ++j) {
                for (int l = 0; l < d; ++l) {
                    omega(d + i * d + k, d + j * d + l) =
                        o11(i, j) * o11(k, l) + o11(i, j) * nu[k] * nu[l] +
                        nu[i] * nu[j] * o11(k, l) + nu[i] * nu[l] * o11(k, j) +
                        nu[k] * nu[j] * o11(i, l);
                }
            }
        }
    }
    return omega;
}

Eigen::MatrixXd random_spd(int d, std::mt19937& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = normal(gen);
    return a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(d, d);
}

NullDistParams chi2_params() {
    NullDistParams p;
    p.nu = Eigen::VectorXd::Ones(1);
    p.omega11 = Eigen::MatrixXd::Ones(1, 1);
    p.trace_gamma0 = 1.0;
    p.n = 100;
    return p;
}

}  // namespace

TEST_CASE("build_B scalar cases") {
    Eigen::VectorXd nu(1);
    nu << 1.0;
    Eigen::MatrixXd b = build_B(nu);
    CHECK(b(0, 0) == doctest::Approx(-2.0));
    CHECK(b(0, 1) == doctest::Approx(1.0));

    nu << 2.0;
    b = build_B(nu);
    CHECK(b(0, 0) == doctest::Approx(-1.0));
    CHECK(b(0, 1) == doctest::Approx(0.25));

    CHECK_THROWS_AS(build_B(Eigen::Vector2d(1.0, 0.0)), invalid_argument);
}

TEST_CASE("build_B at d=2 with unit nu") {
    const Eigen::VectorXd nu = Eigen::VectorXd::Ones(2);
    const Eigen::MatrixXd b = build_B(nu);
    REQUIRE(b.rows() == 4);
    REQUIRE(b.cols() == 6);
    for (int r = 0; r < 4; ++r) {
        CHECK(b.row(r).head(2).sum() == doctest::Approx(-2.0));
    }
    CHECK(b.rightCols(4).isApprox(Eigen::MatrixXd::Identity(4, 4)));
}

TEST_CASE("build_Omega scalar case") {
    Eigen::VectorXd nu(1);
    nu << 1.0;
    const Eigen::MatrixXd omega =
        build_Omega(nu, Eigen::MatrixXd::Ones(1, 1));
    Eigen::MatrixXd expect(2, 2);
    expect << 1, 2, 2, 5;
    CHECK(omega.isApprox(expect, 1e-12));

    CHECK(build_Omega(nu, Eigen::MatrixXd::Zero(1, 1)).isZero());
}

TEST_CASE("build_B and build_Omega match the element-indexed oracle") {
    std::mt19937 gen(2024);
    std::uniform_real_distribution<double> unif(0.2, 3.0);
    for (int d = 1; d <= 3; ++d) {
        for (int rep = 0; rep < 10; ++rep) {
            Eigen::VectorXd nu(d);
            for (int j = 0; j < d; ++j) nu[j] = unif(gen);
            const Eigen::MatrixXd o11 = random_spd(d, gen);

            const Eigen::MatrixXd b = build_B(nu);
            const Eigen::MatrixXd b_oracle = indexed_B(nu);
            CHECK((b - b_oracle).cwiseAbs().maxCoeff() <= 1e-12);

            const Eigen::MatrixXd omega = build_Omega(nu, o11);
            const Eigen::MatrixXd omega_oracle = indexed_Omega(nu, o11);
            CHECK((omega - omega_oracle).cwiseAbs().maxCoeff() <=
                  1e-12 * omega_oracle.cwiseAbs().maxCoeff());
            CHECK((omega - omega.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("build_Omega rejects asymmetric input") {
    Eigen::MatrixXd o11(2, 2);
    o11 << 1.0, 0.5, 0.2, 1.0;
    CHECK_THROWS_AS(build_Omega(Eigen::Vector2d(1.0, 1.0), o11),
                    invalid_argument);
}

TEST_CASE("d=1 null statistic is chi-squared with one degree of freedom") {
    const QuadFormSampler sampler(chi2_params());
    REQUIRE(sampler.eigenvalues().size() == 1);
    CHECK(sampler.eigenvalues()[0] == doctest::Approx(1.0).epsilon(1e-12));

    double mean = 0.0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        mean += sampler.sample(substream_seed(7, streams::quadform,
                                              static_cast<std::uint64_t>(i)));
    }
    mean /= draws;
    CHECK(mean == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("sample mean matches the trace of the quadratic form") {
    std::mt19937 gen(5);
    NullDistParams p;
    p.nu = Eigen::Vector2d(1.3, 0.8);
    p.omega11 = random_spd(2, gen);
    p.trace_gamma0 = 0.9;
    p.n = 200;
    const QuadFormSampler sampler(p);
    // E[Z^T M Z] = tr M, computed from the blocks rather than the sampler
    const Eigen::MatrixXd b = build_B(p.nu);
    const Eigen::MatrixXd omega = build_Omega(p.nu, p.omega11);
    const double expected = (b * omega * b.transpose()).trace() /
                            (p.trace_gamma0 * p.trace_gamma0);

    double mean = 0.0;
    const int draws = 1000000;
    for (int i = 0; i < draws; ++i) {
        mean += sampler.sample(substream_seed(11, streams::quadform,
                                              static_cast<std::uint64_t>(i)));
    }
    mean /= draws;
    CHECK(mean == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("null_quantile reproduces the chi-squared upper bound") {
    // chi2(1) 90th percentile is 2.705543454095404
    const double ub = null_quantile(chi2_params(), 0.10, 200000, 42);
    CHECK(ub == doctest::Approx(std::sqrt(2.705543454095404 / 100.0)).epsilon(0.02));
}

TEST_CASE("null_quantile structural properties") {
    NullDistParams p = chi2_params();

    SUBCASE("zero covariance gives a zero bound") {
        p.omega11.setZero();
        CHECK(null_quantile(p, 0.10, 2000, 1) == 0.0);
    }
    SUBCASE("monotone in alpha") {
        const double ub05 = null_quantile(p, 0.05, 20000, 3);
        const double ub10 = null_quantile(p, 0.10, 20000, 3);
        CHECK(ub05 >= ub10);
    }
    SUBCASE("deterministic under a fixed seed") {
        CHECK(null_quantile(p, 0.10, 5000, 17) ==
              null_quantile(p, 0.10, 5000, 17));
    }
    SUBCASE("scales as 1/sqrt(n)") {
        NullDistParams p4 = p;
        p4.n = 400;
        const double r =
            null_quantile(p, 0.10, 5000, 9) / null_quantile(p4, 0.10, 5000, 9);
        CHECK(r == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("mc_draws floor") {
        CHECK_THROWS_AS(null_quantile(p, 0.10, 999, 1), invalid_argument);
    }
}

TEST_CASE("attach_bounds fills a common bound for every lag") {
    std::mt19937 gen(31);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXi counts(60, 3);
    for (int t = 0; t < 60; ++t) {
        // overdispersed counts via a log-normal daily level
        std::poisson_distribution<int> count(8.0 * std::exp(normal(gen)));
        for (int j = 0; j < 3; ++j) counts(t, j) = 1 + count(gen);
    }
    const BinnedCountSeries y{counts,
                              make_bin_grid(Region::interval(0.0, 1.0), 3)};

    const Autocorrelogram base = autocorrelogram(y, 6);
    const Autocorrelogram a = attach_bounds(base, y, 0.10, 2000, 77);
    REQUIRE(a.upper_bounds.has_value());
    REQUIRE(a.upper_bounds->size() == 6);
    for (double ub : *a.upper_bounds) {
        CHECK(ub == a.upper_bounds->front());
    }
    CHECK(a.meta.alpha == 0.10);
    CHECK(*a.meta.seed == 77);

    const Autocorrelogram b = attach_bounds(base, y, 0.05, 2000, 77);
    CHECK(b.upper_bounds->front() >= a.upper_bounds->front());

    const Autocorrelogram c = attach_bounds(base, y, 0.10, 2000, 77);
    CHECK(c.upper_bounds->front() == a.upper_bounds->front());
}
