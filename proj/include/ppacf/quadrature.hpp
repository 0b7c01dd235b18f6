#pragma once

#include <functional>
#include <vector>

namespace ppacf {

/// Composite Simpson rule on [a, b] with an odd number of nodes (>= 3).
struct SimpsonRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static SimpsonRule over(double a, double b, int points);
};

/// Integrates f over [a, b] with a composite Simpson rule.
double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, int points = 4097);

/// Tensor-product Simpson integration of f over [ax,bx] × [ay,by].
double integrate_simpson2(const std::function<double(double, double)>& f,
                          double ax, double bx, double ay, double by,
                          int points_per_axis = 513);

}  // namespace ppacf
