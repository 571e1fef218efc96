#pragma once

#include <optional>

#include <Eigen/Dense>

#include "beltwave/bifurcation.hpp"
#include "beltwave/surface_operator.hpp"

namespace beltwave {

/// State of the Lyapunov-Schmidt splitting eta = t1 cos(k1.x') + t2 cos(k2.x') + eta~,
/// with eta~ supported off the four kernel modes.
struct LSState {
    Eigen::Vector2d t = Eigen::Vector2d::Zero();
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    SurfaceField eta_tilde;
    VEtaSolution veta;        ///< solution at the assembled full surface
    int inner_iterations = 0;
    double orthogonal_residual = 0.0;  ///< normalized sup off-kernel residual of (4.5)
};

/// A solved nonlinear wave.
struct WaveSolution {
    SurfaceProfile eta;
    Eigen::Vector2d t = Eigen::Vector2d::Zero();
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    Eigen::Vector2d delta = Eigen::Vector2d::Zero();  ///< c - c*
    Field3D v;
    double Q = 0.0;  ///< Bernoulli constant (c1^2 + c2^2)/2
    SystemResiduals residuals;
    int outer_iterations = 0;
};

/// Numerical Lyapunov-Schmidt reduction around a certified bifurcation point:
/// Fourier-multiplier operators L, L1, L2, the orthogonal solve of (4.5), the
/// 2x2 bifurcation system (4.8) and the wave families of Theorem 4.1.
class WaveSolver {
  public:
    WaveSolver(const CAlphaOperator& calpha, const BifurcationPoint& bif);

    /// Fourier multipliers: L has symbol rho(c*, k) (g at k = 0);
    /// L1, L2 carry d rho/d c_j (zero at k = 0).
    SurfaceField apply_L(const SurfaceField& eta) const;
    SurfaceField apply_Lj(const SurfaceField& eta, int j) const;

    /// v_lj = d rho / d c_j (c*, k_l), the coefficient matrix of (4.8).
    const Eigen::Matrix2d& reduced_matrix() const { return V_; }
    const BifurcationPoint& bifurcation() const { return bif_; }

    /// Solves the orthogonal equation (4.5) for eta~ at fixed amplitudes and
    /// parameters: preconditioned fixed point with the kernel coefficients
    /// projected out each sweep. Optional warm start.
    LSState solve_orthogonal(const Eigen::Vector2d& t, const Eigen::Vector2d& c,
                             const SurfaceField* init = nullptr, double tol = 1e-11,
                             int max_iter = 80) const;

    /// H_r(eta, c) = H - L - (c - c*).(L1, L2) applied to the full surface.
    SurfaceField remainder_Hr(const SurfaceField& H, const SurfaceField& eta,
                              const Eigen::Vector2d& c) const;

    /// Bracketed residuals of (4.8): r_l = v_l1 d1 + v_l2 d2 + Psi_l with
    /// Psi_l = P_l H_r / t_l. An equation with |t_l| < guard is dropped
    /// (residual reported as zero).
    Eigen::Vector2d bifurcation_system(const LSState& state) const;

    /// The two-parameter wave family of Theorem 4.1: outer quasi-Newton on c
    /// (Jacobian = reduced matrix) with the orthogonal part re-solved exactly
    /// per evaluation. Amplitudes with t_j = 0 drop equation j; the update is
    /// then the minimal-norm correction on the active rows.
    WaveSolution solve_wave(const Eigen::Vector2d& t) const;

    /// The 2.5-dimensional branch at t1 = 0: holds c[fixed_index] at
    /// fixed_value (defaults to the bifurcation value) and solves the scalar
    /// equation for the other parameter.
    WaveSolution solve_2halfd_branch(double t2, int fixed_index,
                                     std::optional<double> fixed_value = std::nullopt) const;

    /// Assembled full surface for a given LS state.
    SurfaceField assemble_eta(const Eigen::Vector2d& t, const SurfaceField& eta_tilde) const;

    static constexpr double kAmplitudeGuard = 1e-14;

  private:
    bool is_kernel(int n1, int n2) const {
        return (std::abs(n1) == 1 && n2 == 0) || (n1 == 0 && std::abs(n2) == 1);
    }
    WaveSolution finalize(const Eigen::Vector2d& t, const Eigen::Vector2d& c, LSState&& state,
                          int outer_iters) const;

    const CAlphaOperator& calpha_;
    BifurcationPoint bif_;
    Eigen::Matrix2d V_;             // v_lj
    Eigen::VectorXd rho_star_;      // multiplier of L per mode (g at k=0)
    Eigen::MatrixXd drho_;          // num_modes x 2, multipliers of L1, L2
    Eigen::VectorXd norm_;          // g + sigma |k|^2 per mode
};

}  // namespace beltwave
