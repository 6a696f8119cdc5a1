#pragma once

#include <vector>

namespace rodsim {

/// Quadrature rule on the unit interval (0, 1); weights sum to one.
struct QuadratureRule {
    struct Point {
        double t;
        double w;
    };
    std::vector<Point> points;

    int order() const { return static_cast<int>(points.size()); }

    static QuadratureRule gauss_legendre(int n);
};

}  // namespace rodsim
