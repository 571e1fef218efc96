#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "beltwave/dispersion.hpp"
#include "beltwave/lattice.hpp"
#include "beltwave/params.hpp"

namespace beltwave {

/// Result of the asymptote-gap test (3.8) in the regime alpha, kappa_1, kappa_2 > 0.
struct AsymptoteGap {
    double gamma1 = 0.0;  ///< larger asymptote angle (labels swapped if needed)
    double gamma2 = 0.0;
    double theta = 0.0;  ///< angle between generators, taken mod pi in (0, pi)
    bool pass = false;   ///< gamma1 - gamma2 < theta
};

AsymptoteGap asymptote_gap_condition(const Eigen::Vector2d& k1, const Eigen::Vector2d& k2,
                                     const PhysicalParams& params);

/// Bifurcation parameters on a symmetric lattice |k1| = |k2| = k with
/// generators k (cos w, +-sin w): the polar angle of c* solves
/// tan(2 phi) = -alpha/kappa(k) and |c*|^2 = (g + sigma k^2)/nu.
struct SymmetricLatticeConfig {
    double k = 0.0;      ///< common generator length
    double omega = 0.0;  ///< half-angle in (0, pi/2)
    double phi_c = 0.0;  ///< polar angle of c*
    double c_len = 0.0;  ///< |c*|
    double nu = 0.0;     ///< (g + sigma k^2)/|c*|^2, positive
    Eigen::Vector2d c_star = Eigen::Vector2d::Zero();
};

/// All tan(2 phi) branches with positive nu (one or two), ordered by
/// descending nu (ascending |c*|); c* normalized to cos(phi) >= 0.
std::vector<SymmetricLatticeConfig> symmetric_c_star_branches(double k, double omega,
                                                              const PhysicalParams& params);

/// The first branch of symmetric_c_star_branches. Throws when no branch has nu > 0.
SymmetricLatticeConfig symmetric_c_star(double k, double omega, const PhysicalParams& params);

/// A certified (or diagnosed) bifurcation parameter pair.
struct BifurcationPoint {
    Eigen::Vector2d c_star = Eigen::Vector2d::Zero();
    Eigen::Vector2d k1 = Eigen::Vector2d::Zero();
    Eigen::Vector2d k2 = Eigen::Vector2d::Zero();
    std::vector<ModeIndex> roots;                 ///< dispersion roots found in the lattice
    double rho_residual = 0.0;                    ///< max normalized |rho(c*, k_j)|
    double transversality_det = 0.0;              ///< det of the parameter gradients
    double transversality_normalized = 0.0;       ///< det / (|grad1| |grad2|)
    std::optional<AsymptoteGap> gap;              ///< set when the (3.8) regime applies
    ResonanceReport resonance;
    bool nonresonance_pass = false;
    bool multiplicity_pass = false;  ///< roots are exactly {+-k1, +-k2}
    bool gap_pass = false;           ///< (3.8) holds (false also when out of regime)
    bool transversality_pass = false;

    bool all_pass() const {
        return nonresonance_pass && multiplicity_pass && transversality_pass;
    }
};

/// Intersections of the two conics c^T A_j c = 1 by damped Newton from
/// multi-start seeds along both branches of each curve. An empty result is a
/// valid outcome. Extra caller seeds may be prepended.
std::vector<Eigen::Vector2d> general_c_star(const Eigen::Vector2d& k1, const Eigen::Vector2d& k2,
                                            const PhysicalParams& params,
                                            const std::vector<Eigen::Vector2d>& seeds = {});

/// det [grad_c rho(c*, k1); grad_c rho(c*, k2)] with analytic gradients.
double transversality(const Eigen::Vector2d& c_star, const Eigen::Vector2d& k1,
                      const Eigen::Vector2d& k2, const PhysicalParams& params);

/// Aggregates the hypotheses of Theorem 4.1 into one diagnostic record; a
/// failed hypothesis clears its flag but the record is always returned.
BifurcationPoint certify_bifurcation(const Eigen::Vector2d& k1, const Eigen::Vector2d& k2,
                                     const PhysicalParams& params, const Eigen::Vector2d& c_star,
                                     double root_tol = 1e-8);

}  // namespace beltwave
