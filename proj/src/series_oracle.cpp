#include "rodsim/series_oracle.hpp"

#include <cassert>

#include "rodsim/so3.hpp"

namespace rodsim::series {

namespace {

// B_0 .. B_32, convention B_1 = -1/2.
constexpr int kMaxBernoulli = 33;
const double kBernoulli[kMaxBernoulli] = {
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
    8553103.0 / 6.0,
    0.0,
    -23749461029.0 / 870.0,
    0.0,
    8615841276005.0 / 14322.0,
    0.0,
    -7709321041217.0 / 510.0,
};

MatX bracket(const MatX& x, const MatX& y) { return x * y - y * x; }

}  // namespace

MatX hat(const VecX& x, Algebra g) {
    if (g == Algebra::So3) {
        assert(x.size() == 3);
        return skew(x.head<3>());
    }
    assert(x.size() == 6);
    MatX m = MatX::Zero(4, 4);
    m.topLeftCorner<3, 3>() = skew(x.tail<3>());
    m.topRightCorner<3, 1>() = x.head<3>();
    return m;
}

MatX box(const VecX& x, Algebra g) {
    const int k = g == Algebra::So3 ? 3 : 6;
    const MatX hx = hat(x, g);
    MatX b(k, k);
    for (int i = 0; i < k; ++i) {
        VecX e = VecX::Zero(k);
        e[i] = 1.0;
        const MatX he = bracket(hx, hat(e, g));
        if (g == Algebra::So3) {
            b.col(i) = Vec3(he(2, 1), he(0, 2), he(1, 0));
        } else {
            VecX c(6);
            c << he(0, 3), he(1, 3), he(2, 3), he(2, 1), he(0, 2), he(1, 0);
            b.col(i) = c;
        }
    }
    return b;
}

MatX exp(const MatX& x, int n_terms) {
    MatX term = MatX::Identity(x.rows(), x.cols());
    MatX sum = term;
    for (int i = 1; i < n_terms; ++i) {
        term = (term * x) / static_cast<double>(i);
        sum += term;
    }
    return sum;
}

MatX dexp(const MatX& x, const MatX& y, int n_terms) {
    MatX term = y;
    MatX sum = y;  // i = 0 term, 1/1!
    double fact = 1.0;
    for (int i = 1; i < n_terms; ++i) {
        term = bracket(x, term);
        fact *= static_cast<double>(i + 1);
        sum += term / fact;
    }
    return sum;
}

MatX dexp_inv(const MatX& x, const MatX& y, int n_terms) {
    n_terms = std::min(n_terms, kMaxBernoulli);
    MatX term = y;
    MatX sum = kBernoulli[0] * y;
    double fact = 1.0;
    for (int i = 1; i < n_terms; ++i) {
        term = bracket(x, term);
        fact *= static_cast<double>(i);
        sum += (kBernoulli[i] / fact) * term;
    }
    return sum;
}

MatX tangent(const VecX& x, Algebra g, int n_terms) {
    const MatX b = box(x, g);
    MatX term = MatX::Identity(b.rows(), b.cols());
    MatX sum = term;
    double fact = 1.0;
    for (int i = 1; i < n_terms; ++i) {
        term = -(term * b);
        fact *= static_cast<double>(i + 1);
        sum += term / fact;
    }
    return sum;
}

MatX inv_tangent(const VecX& x, Algebra g, int n_terms) {
    n_terms = std::min(n_terms, kMaxBernoulli);
    const MatX b = box(x, g);
    MatX term = MatX::Identity(b.rows(), b.cols());
    MatX sum = kBernoulli[0] * term;
    double fact = 1.0;
    for (int i = 1; i < n_terms; ++i) {
        term = -(term * b);
        fact *= static_cast<double>(i);
        sum += (kBernoulli[i] / fact) * term;
    }
    return sum;
}

}  // namespace rodsim::series
