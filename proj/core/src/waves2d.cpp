#include "beltwave/waves2d.hpp"

#include <cmath>
#include <numbers>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex phase(double t) { return {std::cos(t), std::sin(t)}; }
}  // namespace

double Profile1D::evaluate(double xbar) const {
    const int N = truncation();
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m) acc += mode(m) * phase(m * k0 * xbar);
    return acc.real();
}

double Profile1D::derivative(double xbar) const {
    const int N = truncation();
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m) acc += kI * (m * k0) * mode(m) * phase(m * k0 * xbar);
    return acc.real();
}

double Profile1D::second_derivative(double xbar) const {
    const int N = truncation();
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m) acc -= (m * k0) * (m * k0) * mode(m) * phase(m * k0 * xbar);
    return acc.real();
}

double StreamFunction2D::evaluate(const ChebyshevGrid& grid, double xbar, double z) const {
    const int N = truncation();
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m)
        acc += grid.evaluate(psi.col(m + N).eval(), z) * phase(m * k0 * xbar);
    return acc.real();
}

double StreamFunction2D::d_xbar(const ChebyshevGrid& grid, double xbar, double z) const {
    const int N = truncation();
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m)
        acc += kI * (m * k0) * grid.evaluate(psi.col(m + N).eval(), z) * phase(m * k0 * xbar);
    return acc.real();
}

double StreamFunction2D::d_z(const ChebyshevGrid& grid, double xbar, double z) const {
    const int N = truncation();
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m) {
        const Eigen::VectorXcd dpsi = grid.diff() * psi.col(m + N);
        acc += grid.evaluate(dpsi, z) * phase(m * k0 * xbar);
    }
    return acc.real();
}

Field3D lift_2d_to_3d(const StreamFunction2D& sf, const PhysicalParams& params,
                      const Discretization& disc, int line_axis) {
    const int N = disc.truncation();
    const int Nx = sf.truncation();
    if (Nx > N) throw PreconditionError("lift_2d_to_3d: stream function exceeds lattice truncation");
    const int M = disc.cheb().size();
    const Eigen::Vector2d e = sf.direction.normalized();
    const Eigen::Vector2d ep(-e.y(), e.x());  // e_perp = e3 x e

    Field3D out(N, M);
    const Eigen::MatrixXd& D = disc.cheb().diff();
    for (int m = -Nx; m <= Nx; ++m) {
        const int n1 = (line_axis == 0) ? m : 0;
        const int n2 = (line_axis == 0) ? 0 : m;
        const Eigen::VectorXcd prof = sf.psi.col(m + Nx);
        const Eigen::VectorXcd dprof = D * prof;
        Eigen::VectorXcd swirl = params.alpha * prof;
        if (m == 0) swirl.array() += sf.beta;
        out.profile(0, n1, n2) = -dprof * e.x() + swirl * ep.x();
        out.profile(1, n1, n2) = -dprof * e.y() + swirl * ep.y();
        out.profile(2, n1, n2) = kI * (m * sf.k0) * prof;
    }
    return out;
}

namespace {

/// Returns 0 when all energy sits on the (m, 0) line, 1 for the (0, m) line.
int detect_line(const Field3D& field, const Discretization& disc, double leak_tol) {
    const int N = disc.truncation();
    double off1 = 0.0, off2 = 0.0;  // energy off the n2=0 line / off the n1=0 line
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2)
            for (int j = 0; j < 3; ++j) {
                const double a = field.profile(j, n1, n2).cwiseAbs().maxCoeff();
                if (n2 != 0) off1 = std::max(off1, a);
                if (n1 != 0) off2 = std::max(off2, a);
            }
    const double scale = std::max(1.0, field.sup_coefficient());
    if (off2 <= leak_tol * scale) return 1;
    if (off1 <= leak_tol * scale) return 0;
    throw PreconditionError("extract_2d: field is not constant along a lattice direction");
}

}  // namespace

StreamFunction2D extract_2d(const Field3D& field, const PhysicalParams& params,
                            const Discretization& disc, double leak_tol, double affine_tol) {
    const int line = detect_line(field, disc, leak_tol);
    const int N = disc.truncation();
    const int M = disc.cheb().size();
    const Eigen::Vector2d kline = (line == 0) ? disc.lattice().k1() : disc.lattice().k2();

    StreamFunction2D sf;
    sf.k0 = kline.norm();
    sf.direction = kline / sf.k0;
    sf.psi.resize(M, 2 * N + 1);
    sf.m1 = 0.0;  // gauge

    const Eigen::Vector2d e = sf.direction;
    const Eigen::Vector2d ep(-e.y(), e.x());

    Eigen::MatrixXcd uperp(M, 2 * N + 1);
    Eigen::MatrixXcd ubar(M, 2 * N + 1);
    for (int m = -N; m <= N; ++m) {
        const int n1 = (line == 0) ? m : 0;
        const int n2 = (line == 0) ? 0 : m;
        const Eigen::VectorXcd u1 = field.profile(0, n1, n2);
        const Eigen::VectorXcd u2 = field.profile(1, n1, n2);
        ubar.col(m + N) = e.x() * u1 + e.y() * u2;
        uperp.col(m + N) = ep.x() * u1 + ep.y() * u2;
        sf.psi.col(m + N) = -disc.cheb().antiderivative_from_bottom(ubar.col(m + N).eval());
    }

    // beta from u_perp = alpha psi + beta: unweighted least squares over the
    // collocation values reduces to the mean of the zero-mode misfit.
    const Eigen::VectorXcd misfit0 = uperp.col(N) - params.alpha * sf.psi.col(N);
    sf.beta = misfit0.real().mean();

    double resid = 0.0;
    for (int m = -N; m <= N; ++m) {
        Eigen::VectorXcd r = uperp.col(m + N) - params.alpha * sf.psi.col(m + N);
        if (m == 0) r.array() -= sf.beta;
        resid = std::max(resid, r.cwiseAbs().maxCoeff());
    }
    const double scale = 1.0 + uperp.cwiseAbs().maxCoeff() +
                         std::abs(params.alpha) * sf.psi.cwiseAbs().maxCoeff();
    if (resid / scale > affine_tol)
        throw PreconditionError("extract_2d: u_perp = alpha psi + beta fails, not a Beltrami 2.5D flow");

    sf.m2 = sf.psi(0, N).real();  // flat-trace default; check_2d_system refines
    return sf;
}

TwoDResiduals check_2d_system(const StreamFunction2D& sf, const Profile1D& eta,
                              const PhysicalParams& params, const ChebyshevGrid& grid,
                              double Q_3d) {
    TwoDResiduals out;
    const int N = sf.truncation();
    const int M = grid.size();
    const double period = kTwoPi / sf.k0;
    const int PX = 4 * N + 6;

    // surface boundary value and constant
    Eigen::VectorXd surface_vals(PX);
    for (int p = 0; p < PX; ++p) {
        const double xb = period * p / PX;
        surface_vals[p] = sf.evaluate(grid, xb, eta.evaluate(xb));
    }
    out.m2 = surface_vals.mean();
    out.surface = (surface_vals.array() - out.m2).abs().maxCoeff();

    double bottom = 0.0;
    for (int p = 0; p < PX; ++p)
        bottom = std::max(bottom, std::abs(sf.evaluate(grid, period * p / PX, -params.d) - sf.m1));
    out.bottom = bottom;

    // interior PDE residual per mode: D^2 psi_m + (alpha^2 - (m k0)^2) psi_m + alpha beta delta_m0
    double pde = 0.0, psiscale = 0.0;
    for (int m = -N; m <= N; ++m) {
        Eigen::VectorXcd r = grid.diff2() * sf.psi.col(m + N) +
                             (params.alpha * params.alpha - (m * sf.k0) * (m * sf.k0)) *
                                 sf.psi.col(m + N);
        if (m == 0) r.array() += params.alpha * sf.beta;
        pde = std::max(pde, r.cwiseAbs().maxCoeff());
        psiscale = std::max(psiscale, sf.psi.col(m + N).cwiseAbs().maxCoeff());
    }
    out.pde = pde / (1.0 + (params.alpha * params.alpha + sf.k0 * sf.k0 * N * N) * psiscale);

    out.Q0 = Q_3d - 0.5 * (params.alpha * out.m2 + sf.beta) * (params.alpha * out.m2 + sf.beta);
    double bern = 0.0;
    for (int p = 0; p < PX; ++p) {
        const double xb = period * p / PX;
        const double e = eta.evaluate(xb);
        const double ex = eta.derivative(xb);
        const double exx = eta.second_derivative(xb);
        const double px = sf.d_xbar(grid, xb, e);
        const double pz = sf.d_z(grid, xb, e);
        const double curvature = exx / std::pow(1.0 + ex * ex, 1.5);
        const double lhs = 0.5 * (px * px + pz * pz) + params.g * e - params.sigma * curvature;
        bern = std::max(bern, std::abs(lhs - out.Q0));
    }
    out.bernoulli = bern / (1.0 + std::abs(out.Q0));
    (void)M;
    return out;
}

PhysicalSlab2HalfD physical_slab_2halfd(const SurfaceField& eta, const Field3D& total_dotted,
                                        const PhysicalParams& params, const Discretization& disc,
                                        double leak_tol) {
    PhysicalSlab2HalfD out;
    out.line_axis = detect_line(total_dotted, disc, leak_tol);
    const int line = out.line_axis;
    const int N = disc.truncation();
    const int M = disc.cheb().size();
    const double d = params.d;
    const Eigen::Vector2d kline = (line == 0) ? disc.lattice().k1() : disc.lattice().k2();
    const double k0 = kline.norm();
    const Eigen::Vector2d e = kline / k0;

    out.eta.k0 = k0;
    out.eta.modes.resize(2 * N + 1);
    for (int m = -N; m <= N; ++m)
        out.eta.modes[m + N] = (line == 0) ? eta.at(m, 0) : eta.at(0, m);

    const int PX = disc.padded().points();
    const double period = kTwoPi / k0;

    // dotted profiles along the line
    std::array<Eigen::MatrixXcd, 3> prof;
    for (int j = 0; j < 3; ++j) {
        prof[j].resize(M, 2 * N + 1);
        for (int m = -N; m <= N; ++m) {
            const int n1 = (line == 0) ? m : 0;
            const int n2 = (line == 0) ? 0 : m;
            prof[j].col(m + N) = total_dotted.profile(j, n1, n2);
        }
    }

    Eigen::MatrixXcd vals[3];
    for (auto& v : vals) v.resize(M, PX);
    for (int p = 0; p < PX; ++p) {
        const double xb = period * p / PX;
        const double ev = out.eta.evaluate(xb);
        const double ederiv = out.eta.derivative(xb);
        const Eigen::Vector2d grad = ederiv * e;  // grad eta = eta'(xbar) e
        const double J = (ev + d) / d;
        for (int j = 0; j < M; ++j) {
            const double z_phys = disc.cheb().nodes()[j];
            const double zdot = d * (z_phys - ev) / (d + ev);
            Complex udot[3] = {0.0, 0.0, 0.0};
            for (int m = -N; m <= N; ++m) {
                const Complex ph = phase(m * k0 * xb);
                for (int jc = 0; jc < 3; ++jc)
                    udot[jc] += disc.cheb().evaluate(prof[jc].col(m + N).eval(), zdot) * ph;
            }
            const double stretch = (zdot + d) / d;
            vals[0](j, p) = udot[0] / J;
            vals[1](j, p) = udot[1] / J;
            vals[2](j, p) =
                (grad.x() * stretch * udot[0] + grad.y() * stretch * udot[1]) / J + udot[2];
        }
    }

    // 1D analysis back to line modes
    out.field = Field3D(N, M);
    for (int m = -N; m <= N; ++m) {
        const int n1 = (line == 0) ? m : 0;
        const int n2 = (line == 0) ? 0 : m;
        for (int jc = 0; jc < 3; ++jc) {
            Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(M);
            for (int p = 0; p < PX; ++p)
                coeff += vals[jc].col(p) * std::conj(phase(kTwoPi * m * p / PX));
            out.field.profile(jc, n1, n2) = coeff / double(PX);
        }
    }
    return out;
}

}  // namespace beltwave
