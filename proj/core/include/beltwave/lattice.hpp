#pragma once

#include <vector>

#include <Eigen/Dense>

namespace beltwave {

/// A mode of the dual lattice: k = n1 k1 + n2 k2.
struct ModeIndex {
    int n1 = 0;
    int n2 = 0;
    Eigen::Vector2d k = Eigen::Vector2d::Zero();
};

/// A two-dimensional period lattice together with its dual.
///
/// Generators lambda1, lambda2 span the period lattice; the dual generators
/// k1, k2 satisfy k_i . lambda_j = 2 pi delta_ij. Either side may be supplied
/// and the other is derived by inverting the 2x2 generator matrix.
class Lattice {
  public:
    static Lattice from_generators(const Eigen::Vector2d& lambda1, const Eigen::Vector2d& lambda2);
    static Lattice from_dual(const Eigen::Vector2d& k1, const Eigen::Vector2d& k2);

    const Eigen::Vector2d& lambda1() const { return lambda1_; }
    const Eigen::Vector2d& lambda2() const { return lambda2_; }
    const Eigen::Vector2d& k1() const { return k1_; }
    const Eigen::Vector2d& k2() const { return k2_; }

    Eigen::Vector2d wave_vector(int n1, int n2) const { return n1 * k1_ + n2 * k2_; }
    Eigen::Vector2d point(double a1, double a2) const { return a1 * lambda1_ + a2 * lambda2_; }

    /// Area of the fundamental cell |det(lambda1, lambda2)|.
    double cell_area() const;
    /// Shortest nonzero dual-lattice vector length.
    double min_dual_length() const;

    /// Worst relative deviation of k_i . lambda_j from 2 pi delta_ij.
    double duality_residual() const;

  private:
    Lattice() = default;
    Eigen::Vector2d lambda1_, lambda2_, k1_, k2_;
};

/// All dual-lattice modes with |k| <= radius, each exactly once, in
/// deterministic (n1, n2) lexicographic order.
std::vector<ModeIndex> lattice_enumerate(const Lattice& lat, double radius);

}  // namespace beltwave
