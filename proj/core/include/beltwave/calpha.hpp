#pragma once

#include <vector>

#include <Eigen/Dense>

#include "beltwave/discretization.hpp"
#include "beltwave/field.hpp"
#include "beltwave/flattened.hpp"
#include "beltwave/fourier.hpp"
#include "beltwave/params.hpp"

namespace beltwave {

/// Right-hand side of the curl problem: a divergence-free field w together
/// with the prescribed v3 trace f on zdot = 0 (odd-class surface scalar).
struct CurlRHS {
    Field3D w;
    SurfaceField f;

    /// Max per-mode divergence coefficient of w (membership in Z).
    double divergence_residual(const Discretization& disc) const {
        return flattened_div(w, disc).cwiseAbs().maxCoeff();
    }
};

/// The operator C_alpha : v -> (curl v - alpha v, v3 trace at zdot = 0) on the
/// space Y of divergence-free fields with v3(-d) = 0 and zero mean horizontal
/// momentum, inverted mode by mode:
///  - k != 0: v3 solves a Dirichlet two-point BVP on the Chebyshev grid,
///    the horizontal profiles follow algebraically from the curl/divergence pair;
///  - k = 0: a first-order ODE system closed by the two integral conditions
///    through a square bordered collocation system.
///
/// Construction verifies the non-resonance hypothesis of the isomorphism and
/// caches one LU factorization per mode. Immutable and re-entrant afterwards.
class CAlphaOperator {
  public:
    CAlphaOperator(const Discretization& disc, const PhysicalParams& params);

    /// Forward application (for round-trip verification).
    CurlRHS apply(const Field3D& v) const;

    /// Solves C_alpha v = (w, f). Throws when w is not divergence-free
    /// beyond div_tol (in coefficient sup norm).
    Field3D solve(const CurlRHS& rhs, double div_tol = 1e-9) const;

    const Discretization& discretization() const { return disc_; }
    const PhysicalParams& params() const { return params_; }

  private:
    const Discretization& disc_;
    PhysicalParams params_;
    std::vector<Eigen::PartialPivLU<Eigen::MatrixXd>> bvp_;  // per mode, k != 0
    Eigen::PartialPivLU<Eigen::MatrixXd> zero_mode_;         // bordered k = 0 system
};

}  // namespace beltwave
