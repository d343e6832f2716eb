#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace cw {

/// Composite Simpson nodes/weights on [a, b] with `panels` panels
/// (2*panels + 1 nodes).
struct SimpsonRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    SimpsonRule(double a, double b, int panels) {
        if (panels < 1) throw std::invalid_argument("SimpsonRule: panels must be >= 1");
        const int n = 2 * panels;
        const double h = (b - a) / n;
        nodes.resize(n + 1);
        weights.resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            nodes[i] = a + i * h;
            double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            weights[i] = w * h / 3.0;
        }
    }

    template <typename F>
    auto integrate(F&& f) const {
        auto acc = weights[0] * f(nodes[0]);
        for (std::size_t i = 1; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

} // namespace cw
