#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace beltwave {

class Discretization;

/// A periodic vector field on the flat slab, stored per wave vector as three
/// complex vertical profiles on the z-grid. Component profiles live in the
/// columns of an M x (2N+1)^2 matrix; column index is mode_index(n1, n2).
///
/// Symmetry classes of (1.5): for a physical field the horizontal components
/// carry even-class coefficients (real profiles, c(-k) = conj(c(k))) and the
/// vertical component odd-class ones (imaginary profiles). The storage is
/// general complex; class membership is a measurable invariant, not enforced.
class Field3D {
  public:
    Field3D() = default;
    Field3D(int truncation, int z_nodes);

    int truncation() const { return N_; }
    int z_nodes() const { return M_; }
    int num_modes() const { return (2 * N_ + 1) * (2 * N_ + 1); }

    int mode_index(int n1, int n2) const { return (n1 + N_) * (2 * N_ + 1) + (n2 + N_); }

    /// Profile of one component at one mode (column view).
    Eigen::MatrixXcd::ColXpr profile(int component, int n1, int n2) {
        return comp_[component].col(mode_index(n1, n2));
    }
    Eigen::MatrixXcd::ConstColXpr profile(int component, int n1, int n2) const {
        return comp_[component].col(mode_index(n1, n2));
    }

    Eigen::MatrixXcd& component(int j) { return comp_[j]; }
    const Eigen::MatrixXcd& component(int j) const { return comp_[j]; }

    void set_zero();
    double sup_coefficient() const;
    double distance(const Field3D& other) const;

    /// Largest deviation from the symmetry classes of (1.5): components 1,2
    /// even class, component 3 odd class.
    double class_violation() const;

    Field3D& operator+=(const Field3D& o);
    Field3D& operator-=(const Field3D& o);
    Field3D& operator*=(double s);
    friend Field3D operator+(Field3D a, const Field3D& b) { return a += b; }
    friend Field3D operator-(Field3D a, const Field3D& b) { return a -= b; }
    friend Field3D operator*(double s, Field3D a) { return a *= s; }

  private:
    int N_ = 0, M_ = 0;
    std::array<Eigen::MatrixXcd, 3> comp_;
};

/// Fourier/Chebyshev synthesis of the field at a physical point. The field
/// must satisfy the conjugate-pairing invariant for the result to be real;
/// the imaginary residue is discarded (see eval_field_complex).
Eigen::Vector3d eval_field(const Field3D& field, const Discretization& disc,
                           const Eigen::Vector2d& xp, double z);

/// Complex-valued synthesis, for measuring the imaginary residue.
Eigen::Vector3cd eval_field_complex(const Field3D& field, const Discretization& disc,
                                    const Eigen::Vector2d& xp, double z);

}  // namespace beltwave
