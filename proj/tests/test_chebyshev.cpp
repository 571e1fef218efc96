#include <doctest.h>

#include <cmath>

#include "beltwave/chebyshev.hpp"

using namespace beltwave;

TEST_SUITE("chebyshev") {

TEST_CASE("differentiation matrix is spectrally accurate on exp") {
    const double d = 1.3;
    ChebyshevGrid grid(24, d);
    Eigen::VectorXd f(grid.size()), fp(grid.size());
    for (int j = 0; j < grid.size(); ++j) {
        f[j] = std::exp(grid.nodes()[j]);
        fp[j] = f[j];
    }
    const Eigen::VectorXd df = grid.diff() * f;
    CHECK((df - fp).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::VectorXd d2f = grid.diff2() * f;
    CHECK((d2f - fp).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("quadrature integrates analytic functions") {
    const double d = 0.8;
    ChebyshevGrid grid(20, d);
    Eigen::VectorXd f(grid.size());
    for (int j = 0; j < grid.size(); ++j) f[j] = std::exp(grid.nodes()[j]);
    CHECK(grid.quadrature().dot(f) == doctest::Approx(1.0 - std::exp(-d)).epsilon(1e-12));
    for (int j = 0; j < grid.size(); ++j) f[j] = std::cos(3.0 * grid.nodes()[j]);
    CHECK(grid.quadrature().dot(f) == doctest::Approx(std::sin(3.0 * d) / 3.0).epsilon(1e-12));
}

TEST_CASE("barycentric evaluation interpolates and extrapolates") {
    const double d = 1.0;
    ChebyshevGrid grid(28, d);
    Eigen::VectorXd f(grid.size());
    for (int j = 0; j < grid.size(); ++j) f[j] = std::sin(2.0 * grid.nodes()[j]);
    for (double z : {-0.93, -0.511, -0.1234, 0.0}) {
        CHECK(grid.evaluate(f, z) == doctest::Approx(std::sin(2.0 * z)).epsilon(1e-12));
    }
    // mild extrapolation above the interval stays accurate for entire functions
    CHECK(grid.evaluate(f, 0.02) == doctest::Approx(std::sin(0.04)).epsilon(1e-9));
}

TEST_CASE("antiderivative from the bottom") {
    const double d = 1.1;
    ChebyshevGrid grid(24, d);
    Eigen::VectorXd f(grid.size());
    for (int j = 0; j < grid.size(); ++j) f[j] = std::cos(grid.nodes()[j]);
    const Eigen::VectorXd F = grid.antiderivative_from_bottom(f);
    for (int j = 0; j < grid.size(); ++j) {
        const double expected = std::sin(grid.nodes()[j]) - std::sin(-d);
        CHECK(F[j] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("coefficient round trip") {
    ChebyshevGrid grid(17, 2.0);
    Eigen::VectorXcd v(grid.size());
    for (int j = 0; j < grid.size(); ++j)
        v[j] = std::complex<double>(std::sin(7.0 * j + 0.3), std::cos(3.0 * j));
    const Eigen::VectorXcd back = grid.to_values(grid.to_coefficients(v));
    CHECK((back - v).cwiseAbs().maxCoeff() < 1e-12);
}

}  // TEST_SUITE
