#pragma once

#include <vector>

#include <Eigen/Dense>

#include "beltwave/discretization.hpp"
#include "beltwave/fourier.hpp"

namespace beltwave {

/// Tangent basis and Jacobian of the flattening transform at one point.
struct FlattenBasis {
    Eigen::Vector3d f1, f2, f3;
    double J = 1.0;
};

/// Basis vectors f_j and Jacobian J = (eta + d)/d of the flattening transform
/// at a point (x', zdot), with eta and its gradient evaluated spectrally.
/// Throws DegenerateDomainError when eta(x') <= -d.
FlattenBasis flatten_geometry(const SurfaceProfile& eta, const Lattice& lat, double depth,
                              const Eigen::Vector2d& xp, double zdot);

/// Pointwise data of the flattening transform for a fixed surface, sampled on
/// the padded collocation grid: eta, its gradient, J and the metric
/// coefficients G_jl = f_j . f_l / J used by the flattened nonlinearities.
///
/// All grids are P x P real matrices; z-dependent quantities carry one grid
/// per Chebyshev node. Construction fails on a degenerate domain.
class FlattenedGeometry {
  public:
    FlattenedGeometry(const SurfaceField& eta, const Discretization& disc);

    const Eigen::MatrixXd& eta() const { return eta_; }
    const Eigen::MatrixXd& eta_x() const { return etax_; }
    const Eigen::MatrixXd& eta_y() const { return etay_; }
    const Eigen::MatrixXd& jac() const { return J_; }
    double min_eta() const { return min_eta_; }

    /// G(zi) is the symmetric 3x3 metric at z-node zi, entries packed as
    /// [G11, G12, G13, G22, G23, G33].
    const std::array<Eigen::MatrixXd, 6>& metric(int zi) const { return G_[zi]; }

  private:
    Eigen::MatrixXd eta_, etax_, etay_, J_;
    double min_eta_;
    std::vector<std::array<Eigen::MatrixXd, 6>> G_;
};

}  // namespace beltwave
