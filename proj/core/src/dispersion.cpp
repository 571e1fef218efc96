#include "beltwave/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
constexpr double kPi = std::numbers::pi;

/// Distance of v >= 0 to the nearest element of pi * {1, 2, 3, ...}.
double dist_to_pi_multiples(double v) {
    const double m = std::max(1.0, std::round(v / kPi));
    return std::abs(v - m * kPi);
}
}  // namespace

double kappa(double k_norm, const PhysicalParams& params) {
    if (k_norm < 0.0) throw PreconditionError("kappa: k_norm must be nonnegative");
    const double d = params.d;
    const double t = params.alpha * params.alpha - k_norm * k_norm;
    const double tau = t * d * d;
    if (std::abs(tau) < 1e-6) {
        // shared even series of x cot(x d) / x coth(x d) in t = x^2 about the branch point
        return (1.0 - tau / 3.0 - tau * tau / 45.0 - 2.0 * tau * tau * tau / 945.0) / d;
    }
    if (t > 0.0) {
        const double x = std::sqrt(t);
        if (dist_to_pi_multiples(x * d) < kResonanceTol)
            throw ResonanceError("kappa: sqrt(alpha^2-|k|^2) d at a pole of cot");
        return x / std::tan(x * d);
    }
    const double s = std::sqrt(-t);
    return s / std::tanh(s * d);
}

double rho(const Eigen::Vector2d& c, const Eigen::Vector2d& k, const PhysicalParams& params) {
    const double k2 = k.squaredNorm();
    if (k2 == 0.0) throw PreconditionError("rho: k must be nonzero");
    const double ck = c.dot(k);
    const double ckp = -c.x() * k.y() + c.y() * k.x();  // c . (-l, k)
    return params.g + params.sigma * k2 - ck * ck * kappa(std::sqrt(k2), params) / k2 +
           params.alpha * ck * ckp / k2;
}

Eigen::Vector2d grad_rho(const Eigen::Vector2d& c, const Eigen::Vector2d& k,
                         const PhysicalParams& params) {
    const double k2 = k.squaredNorm();
    if (k2 == 0.0) throw PreconditionError("grad_rho: k must be nonzero");
    const Eigen::Vector2d kp(-k.y(), k.x());
    const double ck = c.dot(k);
    const double ckp = c.dot(kp);
    return (-2.0 * ck * kappa(std::sqrt(k2), params) * k + params.alpha * (ckp * k + ck * kp)) / k2;
}

Eigen::Matrix2d conic_matrix(const Eigen::Vector2d& k, const PhysicalParams& params) {
    const double k2 = k.squaredNorm();
    if (k2 == 0.0) throw PreconditionError("conic_matrix: k must be nonzero");
    const Eigen::Vector2d kp(-k.y(), k.x());
    const double a = params.g + params.sigma * k2;
    const Eigen::Matrix2d kk = k * k.transpose();
    const Eigen::Matrix2d mixed = 0.5 * (k * kp.transpose() + kp * k.transpose());
    return (kappa(std::sqrt(k2), params) * kk - params.alpha * mixed) / (a * k2);
}

DispersionCurve dispersion_curve(const Eigen::Vector2d& k, const PhysicalParams& params,
                                 int samples_per_branch) {
    if (params.alpha == 0.0)
        throw PreconditionError("dispersion_curve: alpha = 0, use irrotational_lines");
    DispersionCurve curve;
    curve.k = k;
    curve.A = conic_matrix(k, params);
    curve.kappa_k = kappa(k.norm(), params);
    curve.gamma = kPi / 2.0 + std::atan(curve.kappa_k / std::abs(params.alpha));

    const double a = params.g + params.sigma * k.squaredNorm();
    const double theta = std::atan2(k.y(), k.x());
    const Eigen::Matrix2d R{{std::cos(theta), -std::sin(theta)}, {std::sin(theta), std::cos(theta)}};
    const double x_char = std::sqrt(a / std::max({std::abs(curve.kappa_k), std::abs(params.alpha), 1e-8}));
    for (int sign = -1; sign <= 1; sign += 2) {
        for (int i = 0; i < samples_per_branch; ++i) {
            const double f = double(i) / std::max(1, samples_per_branch - 1);
            const double x = sign * x_char * std::pow(10.0, -1.0 + 2.0 * f);
            const double y = curve.kappa_k / params.alpha * x - a / (params.alpha * x);
            curve.samples.push_back(R * Eigen::Vector2d(x, y));
        }
    }
    return curve;
}

IrrotationalLines irrotational_lines(const Eigen::Vector2d& k, const PhysicalParams& params,
                                     int samples_per_line) {
    if (params.alpha != 0.0)
        throw PreconditionError("irrotational_lines: requires alpha = 0");
    if (k.squaredNorm() == 0.0) throw PreconditionError("irrotational_lines: k must be nonzero");
    const double a = params.g + params.sigma * k.squaredNorm();
    const double kap = kappa(k.norm(), params);
    IrrotationalLines lines;
    lines.k = k;
    lines.x0 = std::sqrt(a / kap);
    const Eigen::Vector2d khat = k.normalized();
    lines.direction = Eigen::Vector2d(-khat.y(), khat.x());
    for (int sign = -1; sign <= 1; sign += 2) {
        for (int i = 0; i < samples_per_line; ++i) {
            const double f = double(i) / std::max(1, samples_per_line - 1);
            const double y = (-3.0 + 6.0 * f) * lines.x0;
            lines.samples.push_back(sign * lines.x0 * khat + y * lines.direction);
        }
    }
    return lines;
}

ResonanceReport check_nonresonance(const Lattice& lat, const PhysicalParams& params, double tol) {
    ResonanceReport report;
    report.margin = std::numeric_limits<double>::infinity();
    const double a = std::abs(params.alpha);
    if (a == 0.0) return report;
    for (const ModeIndex& m : lattice_enumerate(lat, a)) {
        const double kn = m.k.norm();
        if (kn >= a) continue;  // condition concerns |k| < |alpha| only
        const double v = std::sqrt(a * a - kn * kn) * params.d;
        const double dist = dist_to_pi_multiples(v);
        report.margin = std::min(report.margin, dist);
        if (dist < tol) report.offenders.push_back(m);
    }
    report.pass = report.offenders.empty();
    return report;
}

double dispersion_scan_radius(const Eigen::Vector2d& c, const PhysicalParams& params, double tol) {
    // For |k| >= |alpha|, kappa(|k|) <= |k| + 1/d, so
    //   rho >= g + sigma |k|^2 - |c|^2 (|k| + 1/d) - |alpha| |c|^2,
    // which exceeds tol (g + sigma |k|^2) beyond the positive root below.
    const double c2 = c.squaredNorm();
    const double sp = params.sigma * (1.0 - tol);
    const double c0 = params.g * (1.0 - tol) - c2 / params.d - std::abs(params.alpha) * c2;
    const double disc = c2 * c2 - 4.0 * sp * c0;
    double r_pos = 0.0;
    if (disc >= 0.0) r_pos = (c2 + std::sqrt(disc)) / (2.0 * sp);
    return std::max(r_pos, std::abs(params.alpha)) * (1.0 + 1e-12);
}

std::vector<ModeIndex> enumerate_dispersion_roots(const Eigen::Vector2d& c, const Lattice& lat,
                                                  const PhysicalParams& params, double tol) {
    const double radius = dispersion_scan_radius(c, params, tol);
    std::vector<ModeIndex> roots;
    if (radius <= 0.0) return roots;
    for (const ModeIndex& m : lattice_enumerate(lat, radius)) {
        if (m.n1 == 0 && m.n2 == 0) continue;
        double value;
        try {
            value = rho(c, m.k, params);
        } catch (const ResonanceError&) {
            continue;  // kappa pole: a Case III mode, never a dispersion root
        }
        if (std::abs(value) <= tol * (params.g + params.sigma * m.k.squaredNorm()))
            roots.push_back(m);
    }
    std::sort(roots.begin(), roots.end(), [](const ModeIndex& a, const ModeIndex& b) {
        return a.n1 != b.n1 ? a.n1 < b.n1 : a.n2 < b.n2;
    });
    return roots;
}

}  // namespace beltwave
