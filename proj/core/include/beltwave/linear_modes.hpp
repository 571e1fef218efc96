#pragma once

#include <vector>

#include <Eigen/Dense>

#include "beltwave/discretization.hpp"
#include "beltwave/field.hpp"
#include "beltwave/params.hpp"

namespace beltwave {

/// Resonance classification of a wave vector (Cases I-IV of the linearized problem).
enum class ResonanceCase { I, II, III, IV };

struct CaseInfo {
    ResonanceCase tag = ResonanceCase::I;
    int n = 0;             ///< Case III: sqrt(alpha^2-|k|^2) = pi n / d; Case IV: |alpha| = pi n / d
    bool even_multiple = false;  ///< Case IV distinction
};

CaseInfo classify_case(const Eigen::Vector2d& k, const PhysicalParams& params,
                       double tol = 1e-8);

/// Vertical profile phi(z) of a Case I kernel mode:
/// sin-type for |alpha| > |k|, (z+d)/d at equality, sinh-type below, evaluated
/// through the shared even series near the branch point. phi(-d) = 0, phi(0) = 1.
double phi_profile(double z, double k_norm, const PhysicalParams& params);
/// Analytic derivative phi'(z); phi'(0) = kappa(|k|).
double phi_profile_deriv(double z, double k_norm, const PhysicalParams& params);

/// One kernel element of the linearized problem at wave vector k:
/// v3 = i(c.k) eta_hat phi(z), horizontal components from the curl relations.
struct KernelMode {
    Eigen::Vector2d k = Eigen::Vector2d::Zero();
    int n1 = 0, n2 = 0;   ///< lattice indices when constructed from a lattice scan
    double eta_hat = 0.0;
    ResonanceCase tag = ResonanceCase::I;
    Eigen::VectorXcd v1, v2, v3;  ///< profiles on the z-grid
};

/// Builds the Case I mode. Requires |rho(c,k)| <= tol (g + sigma|k|^2) so the
/// surface equation (3.1f) is satisfiable, and k != 0.
KernelMode build_kernel_mode(const Eigen::Vector2d& k, const Eigen::Vector2d& c, double eta_hat,
                             const PhysicalParams& params, const ChebyshevGrid& grid,
                             double tol = 1e-8);

/// Installs a +-k kernel pair into a Field3D (adds the mode and its conjugate).
void add_mode_pair(Field3D& field, const Discretization& disc, const KernelMode& mode);

/// Symmetric-kernel dimension at parameters c: half the number of dispersion
/// roots in the lattice, with one representative mode per +- pair
/// (normalized eta_hat = 1/2, so each pair synthesizes cos(k.x')).
struct KernelBasis {
    int dimension = 0;
    std::vector<KernelMode> modes;
};

KernelBasis kernel_dimension(const Eigen::Vector2d& c, const Lattice& lat,
                             const PhysicalParams& params, const ChebyshevGrid& grid,
                             double tol = 1e-8);

}  // namespace beltwave
