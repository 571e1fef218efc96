#include "beltwave/linear_modes.hpp"

#include <cmath>
#include <numbers>

#include "beltwave/dispersion.hpp"
#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

// S(t, u) = sin(sqrt(t) u)/sqrt(t), analytically continued through t = 0
// (equals sinh(sqrt(-t) u)/sqrt(-t) for t < 0, and u at t = 0).
double S_profile(double t, double u, double branch_scale) {
    if (std::abs(t) * branch_scale < 1e-6) {
        const double tu2 = t * u * u;
        return u * (1.0 - tu2 / 6.0 + tu2 * tu2 / 120.0 - tu2 * tu2 * tu2 / 5040.0);
    }
    if (t > 0.0) {
        const double x = std::sqrt(t);
        return std::sin(x * u) / x;
    }
    const double s = std::sqrt(-t);
    return std::sinh(s * u) / s;
}

// C(t, u) = d/du S(t, u) = cos(sqrt(t) u) / cosh(sqrt(-t) u).
double C_profile(double t, double u, double branch_scale) {
    if (std::abs(t) * branch_scale < 1e-6) {
        const double tu2 = t * u * u;
        return 1.0 - tu2 / 2.0 + tu2 * tu2 / 24.0 - tu2 * tu2 * tu2 / 720.0;
    }
    if (t > 0.0) return std::cos(std::sqrt(t) * u);
    return std::cosh(std::sqrt(-t) * u);
}

double denominator(double t, const PhysicalParams& params) {
    const double d = params.d;
    if (t > 0.0 && std::abs(t) * d * d >= 1e-6) {
        const double v = std::sqrt(t) * d;
        const double m = std::max(1.0, std::round(v / kPi));
        if (std::abs(v - m * kPi) < kResonanceTol)
            throw ResonanceError("phi_profile: resonant vertical wavenumber");
    }
    return S_profile(t, d, d * d);
}
}  // namespace

CaseInfo classify_case(const Eigen::Vector2d& k, const PhysicalParams& params, double tol) {
    CaseInfo info;
    const double k2 = k.squaredNorm();
    const double t = params.alpha * params.alpha - k2;
    const bool zero_k = (k2 == 0.0);
    bool resonant = false;
    int n = 0;
    if (t > 0.0) {
        const double v = std::sqrt(t) * params.d;
        n = static_cast<int>(std::max(1.0, std::round(v / kPi)));
        resonant = std::abs(v - n * kPi) < tol;
    }
    if (!zero_k) {
        info.tag = resonant ? ResonanceCase::III : ResonanceCase::I;
        if (resonant) info.n = n;
    } else {
        info.tag = resonant ? ResonanceCase::IV : ResonanceCase::II;
        if (resonant) {
            info.n = n;
            info.even_multiple = (n % 2 == 0);
        }
    }
    return info;
}

double phi_profile(double z, double k_norm, const PhysicalParams& params) {
    const double t = params.alpha * params.alpha - k_norm * k_norm;
    const double den = denominator(t, params);
    return S_profile(t, z + params.d, params.d * params.d) / den;
}

double phi_profile_deriv(double z, double k_norm, const PhysicalParams& params) {
    const double t = params.alpha * params.alpha - k_norm * k_norm;
    const double den = denominator(t, params);
    return C_profile(t, z + params.d, params.d * params.d) / den;
}

KernelMode build_kernel_mode(const Eigen::Vector2d& k, const Eigen::Vector2d& c, double eta_hat,
                             const PhysicalParams& params, const ChebyshevGrid& grid, double tol) {
    const double k2 = k.squaredNorm();
    if (k2 == 0.0) throw PreconditionError("build_kernel_mode: k must be nonzero");
    const CaseInfo info = classify_case(k, params);
    if (info.tag != ResonanceCase::I)
        throw ResonanceError("build_kernel_mode: wave vector is not Case I");
    const double r = rho(c, k, params);
    if (std::abs(r) > tol * (params.g + params.sigma * k2))
        throw PreconditionError("build_kernel_mode: rho(c,k) is not zero, mode violates (3.1f)");

    KernelMode mode;
    mode.k = k;
    mode.eta_hat = eta_hat;
    mode.tag = ResonanceCase::I;
    const int M = grid.size();
    mode.v1.resize(M);
    mode.v2.resize(M);
    mode.v3.resize(M);
    const Complex lambda(0.0, c.dot(k));  // i (c.k)
    const Complex il = Complex(0.0, 1.0) * lambda;
    for (int j = 0; j < M; ++j) {
        const double z = grid.nodes()[j];
        const double phi = phi_profile(z, std::sqrt(k2), params);
        const double dphi = phi_profile_deriv(z, std::sqrt(k2), params);
        mode.v3[j] = lambda * eta_hat * phi;
        mode.v1[j] = il / k2 * eta_hat * (k.x() * dphi + params.alpha * k.y() * phi);
        mode.v2[j] = il / k2 * eta_hat * (k.y() * dphi - params.alpha * k.x() * phi);
    }
    return mode;
}

void add_mode_pair(Field3D& field, const Discretization& disc, const KernelMode& mode) {
    (void)disc;
    field.profile(0, mode.n1, mode.n2) += mode.v1;
    field.profile(1, mode.n1, mode.n2) += mode.v2;
    field.profile(2, mode.n1, mode.n2) += mode.v3;
    field.profile(0, -mode.n1, -mode.n2) += mode.v1.conjugate();
    field.profile(1, -mode.n1, -mode.n2) += mode.v2.conjugate();
    field.profile(2, -mode.n1, -mode.n2) += mode.v3.conjugate();
}

KernelBasis kernel_dimension(const Eigen::Vector2d& c, const Lattice& lat,
                             const PhysicalParams& params, const ChebyshevGrid& grid, double tol) {
    const ResonanceReport report = check_nonresonance(lat, params);
    if (!report.pass)
        throw ResonanceError("kernel_dimension: non-resonance condition (2.7) fails");

    KernelBasis basis;
    const auto roots = enumerate_dispersion_roots(c, lat, params, tol);
    basis.dimension = static_cast<int>(roots.size()) / 2;
    for (const ModeIndex& m : roots) {
        if (m.n1 < 0 || (m.n1 == 0 && m.n2 < 0)) continue;  // one representative per +- pair
        KernelMode mode = build_kernel_mode(m.k, c, 0.5, params, grid, tol);
        mode.n1 = m.n1;
        mode.n2 = m.n2;
        basis.modes.push_back(mode);
    }
    return basis;
}

}  // namespace beltwave
