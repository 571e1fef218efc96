#include "beltwave/solver.hpp"

#include <cmath>

#include "beltwave/errors.hpp"

namespace beltwave {

WaveSolver::WaveSolver(const CAlphaOperator& calpha, const BifurcationPoint& bif)
    : calpha_(calpha), bif_(bif) {
    const Discretization& disc = calpha_.discretization();
    const PhysicalParams& params = calpha_.params();

    for (int l = 0; l < 2; ++l) {
        const Eigen::Vector2d k = (l == 0) ? bif_.k1 : bif_.k2;
        const Eigen::Vector2d grad = grad_rho(bif_.c_star, k, params);
        V_(l, 0) = grad.x();
        V_(l, 1) = grad.y();
    }

    const int n = disc.num_modes();
    rho_star_.resize(n);
    drho_.resize(n, 2);
    norm_.resize(n);
    for (int idx = 0; idx < n; ++idx) {
        const ModeIndex& m = disc.mode(idx);
        norm_[idx] = params.g + params.sigma * disc.k_squared(idx);
        if (m.n1 == 0 && m.n2 == 0) {
            rho_star_[idx] = params.g;
            drho_.row(idx).setZero();
            continue;
        }
        rho_star_[idx] = rho(bif_.c_star, m.k, params);
        const Eigen::Vector2d grad = grad_rho(bif_.c_star, m.k, params);
        drho_(idx, 0) = grad.x();
        drho_(idx, 1) = grad.y();
        if (!is_kernel(m.n1, m.n2) && std::abs(rho_star_[idx]) < 1e-6 * norm_[idx])
            throw ResonanceError(
                "WaveSolver: near-resonant lattice mode, multiplicity hypothesis failing "
                "numerically at (" +
                std::to_string(m.n1) + "," + std::to_string(m.n2) + ")");
    }
}

SurfaceField WaveSolver::apply_L(const SurfaceField& eta) const {
    const Discretization& disc = calpha_.discretization();
    const int N = disc.truncation();
    SurfaceField out(N);
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2)
            out.at(n1, n2) = rho_star_[disc.mode_index(n1, n2)] * eta.at(n1, n2);
    return out;
}

SurfaceField WaveSolver::apply_Lj(const SurfaceField& eta, int j) const {
    const Discretization& disc = calpha_.discretization();
    const int N = disc.truncation();
    SurfaceField out(N);
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2)
            out.at(n1, n2) = drho_(disc.mode_index(n1, n2), j) * eta.at(n1, n2);
    return out;
}

SurfaceField WaveSolver::assemble_eta(const Eigen::Vector2d& t, const SurfaceField& eta_tilde) const {
    SurfaceField eta = eta_tilde;
    eta.at(1, 0) = 0.5 * t.x();
    eta.at(-1, 0) = 0.5 * t.x();
    eta.at(0, 1) = 0.5 * t.y();
    eta.at(0, -1) = 0.5 * t.y();
    return eta;
}

LSState WaveSolver::solve_orthogonal(const Eigen::Vector2d& t, const Eigen::Vector2d& c,
                                     const SurfaceField* init, double tol, int max_iter) const {
    const Discretization& disc = calpha_.discretization();
    const int N = disc.truncation();
    const Eigen::Vector2d delta = c - bif_.c_star;

    LSState state;
    state.t = t;
    state.c = c;
    state.eta_tilde = init ? *init : SurfaceField(N);
    // the orthogonal part carries no kernel coefficients by definition
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2)
            if (is_kernel(n1, n2)) state.eta_tilde.at(n1, n2) = 0.0;

    const FlattenedSystem system(calpha_, c);
    const Field3D* warm = nullptr;
    for (int iter = 0; iter < max_iter; ++iter) {
        const SurfaceField eta = assemble_eta(t, state.eta_tilde);
        state.veta = system.solve_v_of_eta(eta, warm);
        warm = &state.veta.v;
        const SurfaceField H = system.reduced_H(state.veta);

        // residual of (4.5) = off-kernel part of H(full eta, c)
        double res = 0.0;
        for (int n1 = -N; n1 <= N; ++n1)
            for (int n2 = -N; n2 <= N; ++n2) {
                if (is_kernel(n1, n2)) continue;
                const int idx = disc.mode_index(n1, n2);
                res = std::max(res, std::abs(H.at(n1, n2)) / norm_[idx]);
            }
        state.inner_iterations = iter + 1;
        state.orthogonal_residual = res;
        if (res < tol) return state;

        // preconditioned update: divide by the multiplier of L + delta . (L1, L2)
        for (int n1 = -N; n1 <= N; ++n1)
            for (int n2 = -N; n2 <= N; ++n2) {
                if (is_kernel(n1, n2)) continue;
                const int idx = disc.mode_index(n1, n2);
                const double m =
                    rho_star_[idx] + delta.x() * drho_(idx, 0) + delta.y() * drho_(idx, 1);
                state.eta_tilde.at(n1, n2) -= H.at(n1, n2) / m;
            }
    }
    throw ConvergenceError("solve_orthogonal: no convergence (amplitude too large?)");
}

SurfaceField WaveSolver::remainder_Hr(const SurfaceField& H, const SurfaceField& eta,
                                      const Eigen::Vector2d& c) const {
    const Discretization& disc = calpha_.discretization();
    const int N = disc.truncation();
    const Eigen::Vector2d delta = c - bif_.c_star;
    SurfaceField Hr = H;
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const int idx = disc.mode_index(n1, n2);
            const double m = rho_star_[idx] + delta.x() * drho_(idx, 0) + delta.y() * drho_(idx, 1);
            Hr.at(n1, n2) -= m * eta.at(n1, n2);
        }
    return Hr;
}

Eigen::Vector2d WaveSolver::bifurcation_system(const LSState& state) const {
    const FlattenedSystem system(calpha_, state.c);
    const SurfaceField eta = assemble_eta(state.t, state.eta_tilde);
    const SurfaceField H = system.reduced_H(state.veta);
    const SurfaceField Hr = remainder_Hr(H, eta, state.c);
    const Eigen::Vector2d delta = state.c - bif_.c_star;

    Eigen::Vector2d r = Eigen::Vector2d::Zero();
    for (int l = 0; l < 2; ++l) {
        const double tl = state.t[l];
        if (std::abs(tl) < kAmplitudeGuard) continue;  // equation dropped, see (4.8)
        // P_l projects on cos(k_l . x'); the coefficient is twice the +k_l mode
        const std::complex<double> coeff = (l == 0) ? Hr.at(1, 0) : Hr.at(0, 1);
        const double Psi = 2.0 * coeff.real() / tl;
        r[l] = V_(l, 0) * delta.x() + V_(l, 1) * delta.y() + Psi;
    }
    return r;
}

WaveSolution WaveSolver::finalize(const Eigen::Vector2d& t, const Eigen::Vector2d& c,
                                  LSState&& state, int outer_iters) const {
    const FlattenedSystem system(calpha_, c);
    WaveSolution wave;
    wave.t = t;
    wave.c = c;
    wave.delta = c - bif_.c_star;
    double leak = 0.0;
    wave.eta = SurfaceProfile::from_field(assemble_eta(t, state.eta_tilde), &leak);
    wave.v = state.veta.v;
    wave.Q = 0.5 * c.squaredNorm();
    wave.residuals = system.residuals(state.veta);
    wave.outer_iterations = outer_iters;
    return wave;
}

WaveSolution WaveSolver::solve_wave(const Eigen::Vector2d& t) const {
    const bool active1 = std::abs(t.x()) >= kAmplitudeGuard;
    const bool active2 = std::abs(t.y()) >= kAmplitudeGuard;

    Eigen::Vector2d c = bif_.c_star;
    if (!active1 && !active2) {
        LSState state = solve_orthogonal(t, c);
        return finalize(t, c, std::move(state), 0);
    }

    if (active1 && active2) {
        const double scale = V_.row(0).norm() * V_.row(1).norm();
        if (std::abs(V_.determinant()) < 1e-10 * scale)
            throw ConvergenceError("solve_wave: degenerate transversality determinant");
    }

    const Eigen::Matrix2d Vinv = V_.inverse();
    SurfaceField warm(calpha_.discretization().truncation());
    for (int outer = 1; outer <= 40; ++outer) {
        LSState state = solve_orthogonal(t, c, &warm);
        warm = state.eta_tilde;
        const Eigen::Vector2d r = bifurcation_system(state);

        double worst = 0.0;
        const double n1 = norm_[calpha_.discretization().mode_index(1, 0)];
        const double n2 = norm_[calpha_.discretization().mode_index(0, 1)];
        if (active1) worst = std::max(worst, std::abs(r.x()) / n1);
        if (active2) worst = std::max(worst, std::abs(r.y()) / n2);
        if (worst < 1e-11) return finalize(t, c, std::move(state), outer);

        if (active1 && active2) {
            c -= Vinv * r;
        } else {
            // single active equation: minimal-norm correction along its gradient row
            const int l = active1 ? 0 : 1;
            const Eigen::Vector2d row = V_.row(l).transpose();
            c -= row * (r[l] / row.squaredNorm());
        }
    }
    throw ConvergenceError("solve_wave: outer iteration on c did not converge");
}

WaveSolution WaveSolver::solve_2halfd_branch(double t2, int fixed_index,
                                             std::optional<double> fixed_value) const {
    if (fixed_index != 0 && fixed_index != 1)
        throw PreconditionError("solve_2halfd_branch: fixed_index must be 0 or 1");
    const int free_index = 1 - fixed_index;
    const double v2_free = V_(1, free_index);
    const double v2_scale = V_.row(1).norm();
    if (v2_scale < 1e-10 || std::abs(v2_free) < 1e-10 * std::max(1.0, v2_scale))
        throw PreconditionError("solve_2halfd_branch: scalar equation coefficient degenerate");

    const Eigen::Vector2d t(0.0, t2);
    Eigen::Vector2d c = bif_.c_star;
    c[fixed_index] = fixed_value.value_or(bif_.c_star[fixed_index]);

    SurfaceField warm(calpha_.discretization().truncation());
    for (int outer = 1; outer <= 40; ++outer) {
        LSState state = solve_orthogonal(t, c, &warm);
        warm = state.eta_tilde;
        const Eigen::Vector2d r = bifurcation_system(state);
        const double n2 = norm_[calpha_.discretization().mode_index(0, 1)];
        if (std::abs(r.y()) / n2 < 1e-11) return finalize(t, c, std::move(state), outer);
        c[free_index] -= r.y() / v2_free;
    }
    throw ConvergenceError("solve_2halfd_branch: no convergence");
}

}  // namespace beltwave
