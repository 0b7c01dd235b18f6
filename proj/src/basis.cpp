#include "ppacf/basis.hpp"

#include <cmath>
#include <numbers>

#include "ppacf/errors.hpp"

namespace ppacf {

BasisSpec default_basis() {
    BasisSpec basis;
    basis.region = Region::interval(0.0, 1.0);
    basis.mu = [](const Point&) { return 3.0; };
    basis.phi = {[](const Point& s) {
        return std::numbers::sqrt2 * std::sin(2.0 * std::numbers::pi * s.x);
    }};
    return basis;
}

double intensity_at(const BasisSpec& basis, const Eigen::VectorXd& u,
                    const Point& s) {
    if (!basis.region.contains(s)) {
        throw invalid_argument("intensity requested outside the basis region");
    }
    if (u.size() != basis.dim()) {
        throw invalid_argument("latent coefficient dimension does not match the basis");
    }
    double g = basis.mu(s);
    for (int i = 0; i < basis.dim(); ++i) {
        g += u[i] * basis.phi[static_cast<std::size_t>(i)](s);
    }
    return std::exp(g);
}

}  // namespace ppacf
