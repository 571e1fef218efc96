#pragma once

#include <complex>

#include <Eigen/Dense>

#include "beltwave/discretization.hpp"
#include "beltwave/field.hpp"
#include "beltwave/params.hpp"

namespace beltwave {

/// A 1D periodic profile along a horizontal direction: modes m k0, |m| <= N.
struct Profile1D {
    double k0 = 0.0;  ///< base wavenumber
    Eigen::VectorXcd modes;

    int truncation() const { return (static_cast<int>(modes.size()) - 1) / 2; }
    std::complex<double> mode(int m) const { return modes[m + truncation()]; }
    double evaluate(double xbar) const;
    double derivative(double xbar) const;
    double second_derivative(double xbar) const;
};

/// Stream function of a two-dimensional wave with affine vorticity, stored as
/// a 1D Fourier series in xbar with vertical profiles on the slab z-grid.
struct StreamFunction2D {
    Eigen::Vector2d direction = Eigen::Vector2d::UnitX();  ///< unit vector e-bar
    double k0 = 0.0;                                       ///< base wavenumber in xbar
    Eigen::MatrixXcd psi;  ///< M x (2N+1), column m + N is the profile of mode m
    double beta = 0.0;
    double m1 = 0.0;  ///< bottom boundary value (gauge)
    double m2 = 0.0;  ///< surface boundary value
    double Q0 = 0.0;  ///< Bernoulli constant of the 2D problem

    int truncation() const { return (static_cast<int>(psi.cols()) - 1) / 2; }
    /// psi at a point; z may slightly exceed the slab for surface evaluation.
    double evaluate(const ChebyshevGrid& grid, double xbar, double z) const;
    double d_xbar(const ChebyshevGrid& grid, double xbar, double z) const;
    double d_z(const ChebyshevGrid& grid, double xbar, double z) const;
};

/// Lifts a stream function to the 2.5-dimensional velocity field
/// u = -psi_z e + (alpha psi + beta) e_perp + psi_xbar e3, placed on the
/// lattice line axis (0: modes (m, 0), 1: modes (0, m)). The field holds
/// literal physical vector components on the slab.
Field3D lift_2d_to_3d(const StreamFunction2D& sf, const PhysicalParams& params,
                      const Discretization& disc, int line_axis = 1);

/// Inverse of the lift: detects the lattice line the field lives on, builds
/// psi by vertical integration of -u.e from the bottom (gauge m1 = 0) and
/// recovers beta from the affine relation u_perp = alpha psi + beta by least
/// squares. Throws when the field is not 2.5-dimensional or when the affine
/// relation fails beyond affine_tol (relative).
StreamFunction2D extract_2d(const Field3D& field, const PhysicalParams& params,
                            const Discretization& disc, double leak_tol = 1e-10,
                            double affine_tol = 1e-8);

/// Residuals of the two-dimensional system (1.2) for a stream function and a
/// 1D surface profile, with the Bernoulli constant derived from the 3D one:
/// Q0 = Q - (alpha m2 + beta)^2 / 2.
struct TwoDResiduals {
    double pde = 0.0;       ///< psi_xx + psi_zz + alpha^2 psi + alpha beta, interior
    double bottom = 0.0;    ///< psi(xbar, -d) = m1
    double surface = 0.0;   ///< psi(xbar, eta(xbar)) = m2
    double bernoulli = 0.0; ///< dynamic condition with surface tension at z = eta
    double m2 = 0.0;
    double Q0 = 0.0;

    double max() const { return std::max({pde, bottom, surface, bernoulli}); }
};

TwoDResiduals check_2d_system(const StreamFunction2D& sf, const Profile1D& eta,
                              const PhysicalParams& params, const ChebyshevGrid& grid,
                              double Q_3d);

/// Samples the physical velocity of a 2.5-dimensional flattened solution onto
/// the slab grid (inverting the flattening per point, with mild Chebyshev
/// extrapolation above the surface). Returns the physical field and the 1D
/// surface profile along the line.
struct PhysicalSlab2HalfD {
    Field3D field;    ///< literal physical components on the slab
    Profile1D eta;    ///< surface along the line
    int line_axis = 1;
};

PhysicalSlab2HalfD physical_slab_2halfd(const SurfaceField& eta, const Field3D& total_dotted,
                                        const PhysicalParams& params, const Discretization& disc,
                                        double leak_tol = 1e-10);

}  // namespace beltwave
