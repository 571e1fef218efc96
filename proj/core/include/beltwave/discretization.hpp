#pragma once

#include <vector>

#include <Eigen/Dense>

#include "beltwave/chebyshev.hpp"
#include "beltwave/fourier.hpp"
#include "beltwave/lattice.hpp"

namespace beltwave {

/// Shared spectral workspace: the lattice, the horizontal truncation N with a
/// padded collocation grid, and the vertical Chebyshev grid. Immutable after
/// construction; all operations taking a Discretization are re-entrant.
class Discretization {
  public:
    Discretization(const Lattice& lat, int truncation, int z_nodes, double depth);

    const Lattice& lattice() const { return lat_; }
    int truncation() const { return N_; }
    int num_modes() const { return (2 * N_ + 1) * (2 * N_ + 1); }
    const ChebyshevGrid& cheb() const { return cheb_; }
    const PaddedTransform& padded() const { return padded_; }

    int mode_index(int n1, int n2) const { return (n1 + N_) * (2 * N_ + 1) + (n2 + N_); }
    const ModeIndex& mode(int index) const { return modes_[index]; }
    const std::vector<ModeIndex>& modes() const { return modes_; }

    /// |k|^2 for a flat mode index.
    double k_squared(int index) const { return k2_[index]; }

    /// Horizontal collocation points of the padded grid, in physical coordinates.
    Eigen::Vector2d grid_point(int p1, int p2) const {
        return lat_.point(double(p1) / padded_.points(), double(p2) / padded_.points());
    }

  private:
    Lattice lat_;
    int N_;
    ChebyshevGrid cheb_;
    PaddedTransform padded_;
    std::vector<ModeIndex> modes_;
    std::vector<double> k2_;
};

}  // namespace beltwave
