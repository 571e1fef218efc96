#pragma once

#include <Eigen/Dense>

#include "beltwave/discretization.hpp"
#include "beltwave/field.hpp"
#include "beltwave/geometry.hpp"
#include "beltwave/params.hpp"

namespace beltwave {

/// A scalar field on the slab: one complex vertical profile per mode,
/// stored like a single Field3D component (M x num_modes).
using ScalarSlabField = Eigen::MatrixXcd;

/// Mode-wise plain divergence of the dotted components: i k.(u1,u2) + u3'.
/// Zero of this is equivalent to physical incompressibility since J > 0.
ScalarSlabField flattened_div(const Field3D& field, const Discretization& disc);

/// Mode-wise plain curl (i k x and d/dz applied per mode).
Field3D plain_curl(const Field3D& field, const Discretization& disc);

/// Covariant components a_j = sum_l (f_j . f_l / J) u_l of the dotted field,
/// evaluated pointwise on the padded grid and analyzed back to modes.
Field3D covariant_components(const Field3D& field, const FlattenedGeometry& geom,
                             const Discretization& disc);

/// The physical curl in dotted representation, Eq.-(2.2)-style: the plain
/// curl of the covariant components.
Field3D flattened_curl(const Field3D& field, const FlattenedGeometry& geom,
                       const Discretization& disc);

/// Flattening nonlinearity N_j(u, eta) = u_j - a_j; linear in u, N(., 0) = 0.
Field3D nonlinearity_N(const Field3D& field, const FlattenedGeometry& geom,
                       const Discretization& disc);

/// Surface quadratic form B(u, eta) = J^-2 [u1^2 + u2^2 + (eta_x u1 + eta_y u2 + J u3)^2]
/// evaluated at the zdot = 0 trace, returned as surface Fourier coefficients.
SurfaceField nonlinearity_B(const Field3D& field, const FlattenedGeometry& geom,
                            const Discretization& disc);

/// The explicit linear-in-eta field L~(eta) whose curl carries the
/// linearization of the flattening (exact in mode space):
///   ((eta/d) U1, (eta/d) U2, -eta_x P U1 - eta_y P U2),  P = (z+d)/d.
Field3D linear_shift_L(const SurfaceField& eta, const LaminarFlow& flow,
                       const PhysicalParams& params, const Discretization& disc);

/// The w^eta / U~^eta change of variables: v = v~ - w^eta - U~[c~^eta].
struct ShiftData {
    Field3D w_eta;                       ///< explicit shift field (mode space, exact)
    Eigen::Vector2d c_tilde = Eigen::Vector2d::Zero();
    LaminarFlow U_tilde;                 ///< laminar flow built from c_tilde
};

/// Computes w^eta and solves the 2x2 system for (c1~, c2~). The system is
/// uniquely solvable iff alpha d is not a nonzero multiple of 2 pi; alpha = 0
/// uses the limit coefficients (d on the diagonal, 0 off it).
ShiftData shift_data(const SurfaceField& eta, const LaminarFlow& flow,
                     const PhysicalParams& params, const Discretization& disc);

/// Builds a Field3D whose k = 0 column is a laminar flow profile.
Field3D laminar_field(const LaminarFlow& flow, const PhysicalParams& params,
                      const Discretization& disc);

}  // namespace beltwave
