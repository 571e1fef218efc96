#pragma once

#include <vector>

#include <Eigen/Dense>

#include "beltwave/lattice.hpp"
#include "beltwave/params.hpp"

namespace beltwave {

/// Distance of x*d to the nearest positive multiple of pi below which the
/// cot/denominator evaluation is refused (condition (2.7) needs a margin).
inline constexpr double kResonanceTol = 1e-8;

/// Vertical eigen-coefficient kappa(|k|) = phi'(0; |k|):
///   sqrt(a^2-k^2) cot(sqrt(a^2-k^2) d)   for |alpha| > |k|,
///   1/d                                  at |alpha| = |k|,
///   sqrt(k^2-a^2) coth(sqrt(k^2-a^2) d)  for |alpha| < |k|.
/// Both branches share an even Taylor series in t = alpha^2 - |k|^2, used
/// near the branch point so the value is continuous through |k| = |alpha|.
/// Throws ResonanceError at a cot pole.
double kappa(double k_norm, const PhysicalParams& params);

/// Dispersion function rho(c, k) = g + sigma |k|^2
///   - (c.k)^2 kappa(|k|)/|k|^2 + alpha (c.k)(c.k_perp)/|k|^2,  k_perp = (-l, k).
double rho(const Eigen::Vector2d& c, const Eigen::Vector2d& k, const PhysicalParams& params);

/// Analytic parameter gradient of rho with respect to c.
Eigen::Vector2d grad_rho(const Eigen::Vector2d& c, const Eigen::Vector2d& k,
                         const PhysicalParams& params);

/// Zero set of rho(., k) in the c-plane: the conic c^T A c = 1, its asymptote
/// angle and sampled points of the hyperbola branches (alpha != 0).
struct DispersionCurve {
    Eigen::Vector2d k;
    Eigen::Matrix2d A;     ///< rho(c,k) = (g + sigma|k|^2)(1 - c^T A c)
    double gamma = 0.0;    ///< angle between asymptotes, in (0, pi)
    double kappa_k = 0.0;  ///< kappa(|k|)
    std::vector<Eigen::Vector2d> samples;
};

DispersionCurve dispersion_curve(const Eigen::Vector2d& k, const PhysicalParams& params,
                                 int samples_per_branch = 32);

/// The conic matrix alone (valid for any alpha, including 0).
Eigen::Matrix2d conic_matrix(const Eigen::Vector2d& k, const PhysicalParams& params);

/// Irrotational (alpha = 0) solution set: two parallel lines c.khat = +-x0.
struct IrrotationalLines {
    Eigen::Vector2d k;
    double x0 = 0.0;            ///< lines are { c : c.khat = +-x0 }
    Eigen::Vector2d direction;  ///< unit vector along the lines (khat_perp)
    std::vector<Eigen::Vector2d> samples;
};

IrrotationalLines irrotational_lines(const Eigen::Vector2d& k, const PhysicalParams& params,
                                     int samples_per_line = 32);

/// Scan result of the non-resonance condition (2.7).
struct ResonanceReport {
    std::vector<ModeIndex> offenders;  ///< modes with sqrt(alpha^2-|k|^2) d near pi Z+
    bool pass = true;
    double margin = 0.0;  ///< smallest distance of sqrt(alpha^2-|k|^2) d to pi Z+ seen
};

ResonanceReport check_nonresonance(const Lattice& lat, const PhysicalParams& params,
                                   double tol = kResonanceTol);

/// All nonzero dual-lattice modes with |rho(c,k)| <= tol (g + sigma|k|^2),
/// scanned out to an a-priori radius beyond which rho must be positive.
/// The result is closed under k -> -k and sorted lexicographically in (n1,n2).
std::vector<ModeIndex> enumerate_dispersion_roots(const Eigen::Vector2d& c, const Lattice& lat,
                                                  const PhysicalParams& params, double tol = 1e-8);

/// The scan radius used by enumerate_dispersion_roots: for |k| > R the bound
/// kappa(|k|) <= |k| + 1/d forces rho > tol (g + sigma|k|^2).
double dispersion_scan_radius(const Eigen::Vector2d& c, const PhysicalParams& params, double tol);

}  // namespace beltwave
