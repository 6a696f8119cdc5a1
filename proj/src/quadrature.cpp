#include "rodsim/quadrature.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace rodsim {

// Nodes from Newton iteration on the Legendre polynomial, then mapped to (0, 1).
QuadratureRule QuadratureRule::gauss_legendre(int n) {
    assert(n >= 1);
    QuadratureRule rule;
    rule.points.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p_prime = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            p_prime = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / p_prime;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * p_prime * p_prime);
        rule.points[n - 1 - i] = {0.5 * (x + 1.0), 0.5 * w};
    }
    return rule;
}

}  // namespace rodsim
