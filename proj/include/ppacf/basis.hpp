#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "ppacf/point_pattern.hpp"

namespace ppacf {

/// Log-intensity basis: G_t(s) = mu(s) + U_t^T phi(s). The phi components
/// are assumed orthonormal in L2 over the region (the built-in basis is; we
/// do not verify user-supplied ones at runtime).
struct BasisSpec {
    std::function<double(const Point&)> mu;
    std::vector<std::function<double(const Point&)>> phi;
    Region region{Region::interval(0.0, 1.0)};

    int dim() const { return static_cast<int>(phi.size()); }
};

/// mu ≡ 3, phi_1(s) = sqrt(2) sin(2 pi s) on [0, 1]: a moderate expected
/// count (≈35.2 per slice at unit latent variance) with orthonormal phi.
BasisSpec default_basis();

/// lambda_t(s) = exp(mu(s) + u^T phi(s)); s must lie in the region.
double intensity_at(const BasisSpec& basis, const Eigen::VectorXd& u,
                    const Point& s);

}  // namespace ppacf
