#include "ppacf/quadrature.hpp"

#include <string>

#include "ppacf/errors.hpp"

namespace ppacf {

SimpsonRule SimpsonRule::over(double a, double b, int points) {
    if (points < 3 || points % 2 == 0) {
        throw invalid_argument("Simpson rule needs an odd point count >= 3, got " +
                               std::to_string(points));
    }
    SimpsonRule rule;
    rule.nodes.resize(static_cast<std::size_t>(points));
    rule.weights.resize(static_cast<std::size_t>(points));
    const double h = (b - a) / static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] =
            (i == points - 1) ? b : a + h * static_cast<double>(i);
        double w = (i == 0 || i == points - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        rule.weights[static_cast<std::size_t>(i)] = w * h / 3.0;
    }
    return rule;
}

double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, int points) {
    const SimpsonRule rule = SimpsonRule::over(a, b, points);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(rule.nodes[i]);
    }
    return acc;
}

double integrate_simpson2(const std::function<double(double, double)>& f,
                          double ax, double bx, double ay, double by,
                          int points_per_axis) {
    const SimpsonRule rx = SimpsonRule::over(ax, bx, points_per_axis);
    const SimpsonRule ry = SimpsonRule::over(ay, by, points_per_axis);
    double acc = 0.0;
    for (std::size_t i = 0; i < rx.nodes.size(); ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < ry.nodes.size(); ++j) {
            inner += ry.weights[j] * f(rx.nodes[i], ry.nodes[j]);
        }
        acc += rx.weights[i] * inner;
    }
    return acc;
}

}  // namespace ppacf
