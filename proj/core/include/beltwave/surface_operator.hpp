#pragma once

#include <memory>

#include <Eigen/Dense>

#include "beltwave/calpha.hpp"
#include "beltwave/flattened.hpp"

namespace beltwave {

/// Result of solving (2.5a)-(2.5e) for the velocity field at a given surface.
struct VEtaSolution {
    SurfaceField eta;
    Field3D v;      ///< the unknown of (2.5)
    Field3D total;  ///< U + v + w^eta + U~^eta (the full dotted velocity)
    ShiftData shift;
    std::shared_ptr<const FlattenedGeometry> geom;
    int picard_iterations = 0;
    double last_update = 0.0;
};

/// Normalized residuals of the flattened system (2.5a)-(2.5f).
struct SystemResiduals {
    double curl = 0.0;       ///< (2.5a) curl v - alpha v = G(v, eta)
    double divergence = 0.0; ///< (2.5b)
    double surface = 0.0;    ///< (2.5c) v3 = c1 eta_x + c2 eta_y on z = 0
    double bottom = 0.0;     ///< (2.5d)
    double momentum = 0.0;   ///< (2.5e) zero-mean horizontal momentum
    double bernoulli = 0.0;  ///< (2.5f), i.e. the reduced operator H itself

    double max() const {
        return std::max({curl, divergence, surface, bottom, momentum, bernoulli});
    }
};

/// The flattened water-wave system at fixed parameters c: the solution
/// operator v(eta, c) of Theorem 2.1 realized as a Picard iteration
/// preconditioned by C_alpha^-1, and the reduced surface operator H(eta, c)
/// of Eq. (2.6). Pure and re-entrant; holds no per-solve state.
class FlattenedSystem {
  public:
    FlattenedSystem(const CAlphaOperator& calpha, const Eigen::Vector2d& c);

    const Eigen::Vector2d& c() const { return c_; }
    const Discretization& discretization() const { return calpha_.discretization(); }
    const PhysicalParams& params() const { return calpha_.params(); }

    /// Solves (2.5a)-(2.5e). The map is affine in v, so the iteration
    /// converges at a rate set by the surface amplitude; the Lipschitz ratio
    /// of successive iterates is monitored and failure to contract throws.
    VEtaSolution solve_v_of_eta(const SurfaceField& eta, const Field3D* v_init = nullptr,
                                double tol = 1e-12, int max_iter = 50) const;

    /// H(eta, c) = c1 v1|0 + c2 v2|0 + g eta - sigma Lap eta - R(v, eta)
    /// assembled from an existing solution.
    SurfaceField reduced_H(const VEtaSolution& sol) const;
    /// Convenience: solve then assemble.
    SurfaceField reduced_H(const SurfaceField& eta) const;

    /// Full residual table for a solution of (2.5); bernoulli is evaluated
    /// from the reduced operator at the solved field.
    SystemResiduals residuals(const VEtaSolution& sol) const;

    /// The curl part of G(v, eta) at the solution (diagnostics).
    Field3D G_of(const VEtaSolution& sol) const;

  private:
    const CAlphaOperator& calpha_;
    Eigen::Vector2d c_;
    LaminarFlow flow_;
};

}  // namespace beltwave
