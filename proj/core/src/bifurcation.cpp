#include "beltwave/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
constexpr double kPi = std::numbers::pi;
}

AsymptoteGap asymptote_gap_condition(const Eigen::Vector2d& k1, const Eigen::Vector2d& k2,
                                     const PhysicalParams& params) {
    if (params.alpha <= 0.0)
        throw PreconditionError("asymptote_gap_condition: analyzed regime needs alpha > 0");
    const double kap1 = kappa(k1.norm(), params);
    const double kap2 = kappa(k2.norm(), params);
    if (kap1 <= 0.0 || kap2 <= 0.0)
        throw PreconditionError("asymptote_gap_condition: analyzed regime needs kappa > 0");

    double g1 = kPi / 2.0 + std::atan(kap1 / params.alpha);
    double g2 = kPi / 2.0 + std::atan(kap2 / params.alpha);
    if (g1 < g2) std::swap(g1, g2);

    // Oriented angle between generators mod pi; the sets between asymptotes
    // are double cones, invariant under rotation by pi.
    const double cross = k1.x() * k2.y() - k1.y() * k2.x();
    if (std::abs(cross) <= 1e-12 * k1.norm() * k2.norm())
        throw PreconditionError("asymptote_gap_condition: generators are parallel");
    double theta = std::atan2(cross, k1.dot(k2));
    if (theta < 0.0) theta += kPi;

    AsymptoteGap gap;
    gap.gamma1 = g1;
    gap.gamma2 = g2;
    gap.theta = theta;
    gap.pass = (g1 - g2 < theta);
    return gap;
}

std::vector<SymmetricLatticeConfig> symmetric_c_star_branches(double k, double omega,
                                                              const PhysicalParams& params) {
    if (params.alpha == 0.0)
        throw PreconditionError("symmetric_c_star: alpha must be nonzero");
    if (!(omega > 0.0 && omega < kPi / 2.0))
        throw PreconditionError("symmetric_c_star: omega must lie in (0, pi/2)");
    const double kap = kappa(k, params);
    const double a = params.g + params.sigma * k * k;
    const double phi0 = 0.5 * std::atan2(-params.alpha, kap);

    std::vector<SymmetricLatticeConfig> out;
    for (double phi : {phi0, phi0 + kPi / 2.0}) {
        const double cp = std::cos(phi), sp = std::sin(phi);
        const double nu = (1.0 - 2.0 * std::sin(omega) * std::sin(omega)) *
                              (kap * cp * cp - params.alpha * cp * sp) +
                          kap * std::sin(omega) * std::sin(omega);
        if (nu <= 0.0) continue;
        SymmetricLatticeConfig cfg;
        cfg.k = k;
        cfg.omega = omega;
        cfg.nu = nu;
        cfg.c_len = std::sqrt(a / nu);
        // canonical representative with cos(phi) >= 0 (c* and -c* are equivalent)
        cfg.phi_c = (cp < 0.0) ? phi - kPi : phi;
        cfg.c_star = cfg.c_len * Eigen::Vector2d(std::cos(cfg.phi_c), std::sin(cfg.phi_c));
        out.push_back(cfg);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.nu > y.nu; });
    return out;
}

SymmetricLatticeConfig symmetric_c_star(double k, double omega, const PhysicalParams& params) {
    const auto branches = symmetric_c_star_branches(k, omega, params);
    if (branches.empty())
        throw PreconditionError("symmetric_c_star: no tan(2 phi) branch gives nu > 0");
    return branches.front();
}

namespace {

/// Damped Newton for (c^T A1 c - 1, c^T A2 c - 1) = 0.
bool newton_conic(const Eigen::Matrix2d& A1, const Eigen::Matrix2d& A2, Eigen::Vector2d& c) {
    auto residual = [&](const Eigen::Vector2d& x) {
        return Eigen::Vector2d(x.dot(A1 * x) - 1.0, x.dot(A2 * x) - 1.0);
    };
    Eigen::Vector2d r = residual(c);
    for (int iter = 0; iter < 50; ++iter) {
        if (r.cwiseAbs().maxCoeff() < 1e-12) return true;
        Eigen::Matrix2d Jac;
        Jac.row(0) = 2.0 * (A1 * c).transpose();
        Jac.row(1) = 2.0 * (A2 * c).transpose();
        const double det = Jac.determinant();
        if (!std::isfinite(det) || std::abs(det) < 1e-14) return false;
        const Eigen::Vector2d step = Jac.partialPivLu().solve(r);
        double lambda = 1.0;
        for (int h = 0; h < 8; ++h) {
            const Eigen::Vector2d trial = c - lambda * step;
            const Eigen::Vector2d rt = residual(trial);
            if (rt.norm() < r.norm()) {
                c = trial;
                r = rt;
                break;
            }
            lambda *= 0.5;
            if (h == 7) return false;
        }
    }
    return r.cwiseAbs().maxCoeff() < 1e-12;
}

/// Seeds along both branches of the conic c^T A c = 1 (hyperbola for
/// indefinite A, line pair for rank-one A), geometrically spaced.
std::vector<Eigen::Vector2d> conic_seeds(const Eigen::Vector2d& k, const PhysicalParams& params) {
    std::vector<Eigen::Vector2d> seeds;
    const double a = params.g + params.sigma * k.squaredNorm();
    const double kap = kappa(k.norm(), params);
    const double theta = std::atan2(k.y(), k.x());
    const Eigen::Matrix2d R{{std::cos(theta), -std::sin(theta)}, {std::sin(theta), std::cos(theta)}};
    if (params.alpha != 0.0) {
        const double x_char = std::sqrt(a / std::max({std::abs(kap), std::abs(params.alpha), 1e-8}));
        for (int sign = -1; sign <= 1; sign += 2)
            for (int i = 0; i < 16; ++i) {
                const double x = sign * x_char * std::pow(10.0, -1.0 + 2.0 * i / 15.0);
                const double y = kap / params.alpha * x - a / (params.alpha * x);
                seeds.push_back(R * Eigen::Vector2d(x, y));
            }
    } else {
        if (kap <= 0.0) return seeds;
        const double x0 = std::sqrt(a / kap);
        for (int sign = -1; sign <= 1; sign += 2)
            for (int i = 0; i < 16; ++i) {
                const double y = (-4.0 + 8.0 * i / 15.0) * x0;
                seeds.push_back(R * Eigen::Vector2d(sign * x0, y));
            }
    }
    return seeds;
}

}  // namespace

std::vector<Eigen::Vector2d> general_c_star(const Eigen::Vector2d& k1, const Eigen::Vector2d& k2,
                                            const PhysicalParams& params,
                                            const std::vector<Eigen::Vector2d>& seeds) {
    const double cross = k1.x() * k2.y() - k1.y() * k2.x();
    if (std::abs(cross) <= 1e-12 * k1.norm() * k2.norm())
        throw PreconditionError("general_c_star: k1, k2 must be linearly independent");
    const Eigen::Matrix2d A1 = conic_matrix(k1, params);
    const Eigen::Matrix2d A2 = conic_matrix(k2, params);

    std::vector<Eigen::Vector2d> starts = seeds;
    for (const auto& s : conic_seeds(k1, params)) starts.push_back(s);
    for (const auto& s : conic_seeds(k2, params)) starts.push_back(s);

    std::vector<Eigen::Vector2d> found;
    for (Eigen::Vector2d c : starts) {
        if (!newton_conic(A1, A2, c)) continue;
        const double r1 = std::abs(c.dot(A1 * c) - 1.0);
        const double r2 = std::abs(c.dot(A2 * c) - 1.0);
        if (r1 > 1e-10 || r2 > 1e-10) continue;
        bool dup = false;
        for (const auto& p : found)
            if ((p - c).norm() < 1e-8 * std::max(1.0, c.norm())) {
                dup = true;
                break;
            }
        if (!dup) found.push_back(c);
    }
    std::sort(found.begin(), found.end(), [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
        return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
    });
    return found;
}

double transversality(const Eigen::Vector2d& c_star, const Eigen::Vector2d& k1,
                      const Eigen::Vector2d& k2, const PhysicalParams& params) {
    const Eigen::Vector2d g1 = grad_rho(c_star, k1, params);
    const Eigen::Vector2d g2 = grad_rho(c_star, k2, params);
    return g1.x() * g2.y() - g1.y() * g2.x();
}

BifurcationPoint certify_bifurcation(const Eigen::Vector2d& k1, const Eigen::Vector2d& k2,
                                     const PhysicalParams& params, const Eigen::Vector2d& c_star,
                                     double root_tol) {
    BifurcationPoint bp;
    bp.c_star = c_star;
    bp.k1 = k1;
    bp.k2 = k2;

    const Lattice lat = Lattice::from_dual(k1, k2);

    bp.resonance = check_nonresonance(lat, params);
    bp.nonresonance_pass = bp.resonance.pass;

    double res = 0.0;
    for (const Eigen::Vector2d& k : {k1, k2}) {
        try {
            res = std::max(res, std::abs(rho(c_star, k, params)) /
                                    (params.g + params.sigma * k.squaredNorm()));
        } catch (const ResonanceError&) {
            res = std::numeric_limits<double>::infinity();
        }
    }
    bp.rho_residual = res;

    bp.roots = enumerate_dispersion_roots(c_star, lat, params, root_tol);
    // exactly {+-k1, +-k2} <=> the four index pairs (+-1,0), (0,+-1)
    bp.multiplicity_pass = bp.roots.size() == 4;
    for (const ModeIndex& m : bp.roots) {
        const bool generator = (std::abs(m.n1) == 1 && m.n2 == 0) || (m.n1 == 0 && std::abs(m.n2) == 1);
        if (!generator) bp.multiplicity_pass = false;
    }

    try {
        bp.gap = asymptote_gap_condition(k1, k2, params);
        bp.gap_pass = bp.gap->pass;
    } catch (const PreconditionError&) {
        bp.gap.reset();  // outside the analyzed regime; not a certification failure
        bp.gap_pass = false;
    }

    try {
        bp.transversality_det = transversality(c_star, k1, k2, params);
        const double scale = grad_rho(c_star, k1, params).norm() * grad_rho(c_star, k2, params).norm();
        bp.transversality_normalized = (scale > 0.0) ? bp.transversality_det / scale : 0.0;
        bp.transversality_pass = std::abs(bp.transversality_normalized) > 1e-10;
    } catch (const ResonanceError&) {
        bp.transversality_pass = false;
    }
    return bp;
}

}  // namespace beltwave
