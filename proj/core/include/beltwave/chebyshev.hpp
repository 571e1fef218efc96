#pragma once

#include <Eigen/Dense>

namespace beltwave {

/// Chebyshev-Gauss-Lobatto collocation grid on the vertical interval [-d, 0].
///
/// Nodes are ordered surface-first: z[0] = 0, z[M-1] = -d. The grid carries
/// the spectral differentiation matrix, Clenshaw-Curtis quadrature weights,
/// value<->Chebyshev-coefficient transforms and barycentric evaluation
/// (which also extrapolates the interpolating polynomial slightly beyond
/// the interval, used when sampling fields up to a wavy surface).
class ChebyshevGrid {
  public:
    ChebyshevGrid(int num_nodes, double depth);

    int size() const { return M_; }
    double depth() const { return d_; }
    const Eigen::VectorXd& nodes() const { return z_; }
    const Eigen::MatrixXd& diff() const { return D_; }
    const Eigen::MatrixXd& diff2() const { return D2_; }
    /// Clenshaw-Curtis weights: w.dot(values) integrates over [-d, 0].
    const Eigen::VectorXd& quadrature() const { return w_; }

    /// Chebyshev coefficients of the interpolating polynomial through nodal values.
    Eigen::VectorXcd to_coefficients(const Eigen::VectorXcd& values) const;
    Eigen::VectorXcd to_values(const Eigen::VectorXcd& coeffs) const;

    /// Barycentric evaluation at arbitrary z of the polynomial through nodal values.
    double evaluate(const Eigen::VectorXd& values, double z) const;
    std::complex<double> evaluate(const Eigen::VectorXcd& values, double z) const;

    /// Nodal values of the antiderivative F(z) = int_{-d}^{z} f, F(-d) = 0.
    Eigen::VectorXcd antiderivative_from_bottom(const Eigen::VectorXcd& values) const;
    Eigen::VectorXd antiderivative_from_bottom(const Eigen::VectorXd& values) const;

  private:
    int M_;
    double d_;
    Eigen::VectorXd z_;       // physical nodes on [-d, 0]
    Eigen::VectorXd x_;       // standard nodes cos(j pi / (M-1)) on [-1, 1]
    Eigen::VectorXd bary_;    // barycentric weights
    Eigen::MatrixXd D_, D2_;  // d/dz and its square
    Eigen::VectorXd w_;       // quadrature weights on [-d, 0]
    Eigen::MatrixXd vals2coef_, coef2vals_;
};

}  // namespace beltwave
