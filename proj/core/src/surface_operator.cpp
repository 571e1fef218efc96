#include "beltwave/surface_operator.hpp"

#include <cmath>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);
}  // namespace

FlattenedSystem::FlattenedSystem(const CAlphaOperator& calpha, const Eigen::Vector2d& c)
    : calpha_(calpha), c_(c), flow_{c.x(), c.y()} {}

VEtaSolution FlattenedSystem::solve_v_of_eta(const SurfaceField& eta, const Field3D* v_init,
                                             double tol, int max_iter) const {
    const Discretization& disc = calpha_.discretization();
    const PhysicalParams& params = calpha_.params();
    const int N = disc.truncation();

    VEtaSolution sol;
    sol.eta = eta;
    sol.geom = std::make_shared<FlattenedGeometry>(eta, disc);
    sol.shift = shift_data(eta, flow_, params, disc);

    Field3D base = laminar_field(flow_, params, disc);
    base += sol.shift.w_eta;
    base += laminar_field(sol.shift.U_tilde, params, disc);

    const Field3D curlL = plain_curl(linear_shift_L(eta, flow_, params, disc), disc);

    // G(0, eta) and the inhomogeneous part C_alpha^-1(G(0,eta), c1 eta_x + c2 eta_y)
    CurlRHS rhs0;
    rhs0.w = plain_curl(nonlinearity_N(base, *sol.geom, disc), disc);
    rhs0.w -= curlL;
    rhs0.f = SurfaceField(N);
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const Eigen::Vector2d k = disc.lattice().wave_vector(n1, n2);
            rhs0.f.at(n1, n2) = kI * c_.dot(k) * eta.at(n1, n2);
        }
    const Field3D v0 = calpha_.solve(rhs0);

    Field3D v = v_init ? *v_init : v0;
    double prev_diff = std::numeric_limits<double>::infinity();
    int bad_ratio = 0;
    for (int iter = 0; iter < max_iter; ++iter) {
        // G(v,eta) - G(0,eta) = curl N(v, eta) by linearity of N in its field
        CurlRHS step;
        step.w = plain_curl(nonlinearity_N(v, *sol.geom, disc), disc);
        step.f = SurfaceField(N);
        Field3D v_new = calpha_.solve(step);
        v_new += v0;

        const double diff = v_new.distance(v);
        v = v_new;
        sol.picard_iterations = iter + 1;
        sol.last_update = diff;
        const double scale = std::max(1.0, v.sup_coefficient());
        if (diff <= tol * scale) break;
        if (prev_diff < std::numeric_limits<double>::infinity() &&
            diff > 1e3 * std::numeric_limits<double>::epsilon() * scale) {
            if (diff > 0.9 * prev_diff) {
                if (++bad_ratio >= 3)
                    throw ConvergenceError(
                        "solve_v_of_eta: Picard iteration stopped contracting (eta too large)");
            } else {
                bad_ratio = 0;
            }
        }
        prev_diff = diff;
        if (iter == max_iter - 1)
            throw ConvergenceError("solve_v_of_eta: no convergence within iteration budget");
    }

    sol.v = v;
    base += v;
    sol.total = std::move(base);
    return sol;
}

SurfaceField FlattenedSystem::reduced_H(const SurfaceField& eta) const {
    return reduced_H(solve_v_of_eta(eta));
}

SurfaceField FlattenedSystem::reduced_H(const VEtaSolution& sol) const {
    const Discretization& disc = calpha_.discretization();
    const PhysicalParams& params = calpha_.params();
    const int N = disc.truncation();

    // B(U + v~, eta) at the surface, with v~ = v + w^eta + U~^eta
    const SurfaceField B = nonlinearity_B(sol.total, *sol.geom, disc);

    // DB[U,0](v~, eta) = 2 c1 v~1|0 + 2 c2 v~2|0 - 2 |c|^2 eta / d
    const double c2 = c_.squaredNorm();
    SurfaceField DB(N);
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const int idx = disc.mode_index(n1, n2);
            Complex t1 = sol.total.component(0)(0, idx);
            Complex t2 = sol.total.component(1)(0, idx);
            if (n1 == 0 && n2 == 0) {
                t1 -= c_.x();  // remove the base laminar surface value U(0) = c
                t2 -= c_.y();
            }
            DB.at(n1, n2) = 2.0 * c_.x() * t1 + 2.0 * c_.y() * t2 -
                            2.0 * c2 * sol.eta.at(n1, n2) / params.d;
        }

    // Surface-tension remainder T(eta) = div( grad eta |grad eta|^2 /
    //   (sqrt(1+|grad eta|^2)(sqrt(1+|grad eta|^2)+1)) )
    const auto& ft = disc.padded();
    const Eigen::ArrayXXd ex = sol.geom->eta_x().array();
    const Eigen::ArrayXXd ey = sol.geom->eta_y().array();
    const Eigen::ArrayXXd s = ex * ex + ey * ey;
    const Eigen::ArrayXXd root = (1.0 + s).sqrt();
    const Eigen::ArrayXXd factor = s / (root * (root + 1.0));
    const SurfaceField W1 = ft.analyze_field((ex * factor).matrix().cast<Complex>());
    const SurfaceField W2 = ft.analyze_field((ey * factor).matrix().cast<Complex>());

    SurfaceField H(N);
    const Eigen::Vector2d ct = sol.shift.c_tilde;
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const int idx = disc.mode_index(n1, n2);
            const Eigen::Vector2d k = disc.lattice().wave_vector(n1, n2);
            Complex Bq = B.at(n1, n2) - DB.at(n1, n2);
            if (n1 == 0 && n2 == 0) Bq -= c2;  // subtract B(U, 0) = c1^2 + c2^2
            const Complex T = kI * (k.x() * W1.at(n1, n2) + k.y() * W2.at(n1, n2));
            Complex R = -0.5 * Bq - params.sigma * T;
            if (n1 == 0 && n2 == 0) R -= c_.dot(ct);
            const Complex trace =
                c_.x() * sol.v.component(0)(0, idx) + c_.y() * sol.v.component(1)(0, idx);
            H.at(n1, n2) = trace + (params.g + params.sigma * k.squaredNorm()) * sol.eta.at(n1, n2) - R;
        }
    return H;
}

Field3D FlattenedSystem::G_of(const VEtaSolution& sol) const {
    const Discretization& disc = calpha_.discretization();
    const PhysicalParams& params = calpha_.params();
    Field3D G = plain_curl(nonlinearity_N(sol.total, *sol.geom, disc), disc);
    G -= plain_curl(linear_shift_L(sol.eta, flow_, params, disc), disc);
    return G;
}

SystemResiduals FlattenedSystem::residuals(const VEtaSolution& sol) const {
    const Discretization& disc = calpha_.discretization();
    const PhysicalParams& params = calpha_.params();
    const int N = disc.truncation();
    SystemResiduals res;

    const Field3D G = G_of(sol);
    Field3D curl_eq = plain_curl(sol.v, disc);
    Field3D av = sol.v;
    av *= params.alpha;
    curl_eq -= av;
    const double curl_scale =
        1.0 + curl_eq.sup_coefficient() + G.sup_coefficient();
    curl_eq -= G;
    res.curl = curl_eq.sup_coefficient() / curl_scale;

    const double vscale = 1.0 + sol.v.sup_coefficient();
    res.divergence = flattened_div(sol.v, disc).cwiseAbs().maxCoeff() / vscale;

    double surf = 0.0, bottom = 0.0;
    const int M = disc.cheb().size();
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const int idx = disc.mode_index(n1, n2);
            const Eigen::Vector2d k = disc.lattice().wave_vector(n1, n2);
            const Complex target = kI * c_.dot(k) * sol.eta.at(n1, n2);
            surf = std::max(surf, std::abs(sol.v.component(2)(0, idx) - target));
            bottom = std::max(bottom, std::abs(sol.v.component(2)(M - 1, idx)));
        }
    res.surface = surf / vscale;
    res.bottom = bottom / vscale;

    const int zero = disc.mode_index(0, 0);
    const auto& wq = disc.cheb().quadrature();
    const Complex m1 = wq.cast<Complex>().dot(sol.v.component(0).col(zero));
    const Complex m2 = wq.cast<Complex>().dot(sol.v.component(1).col(zero));
    res.momentum = std::max(std::abs(m1), std::abs(m2)) / (vscale * params.d);

    const SurfaceField H = reduced_H(sol);
    double bern = 0.0;
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const double a =
                params.g + params.sigma * disc.lattice().wave_vector(n1, n2).squaredNorm();
            bern = std::max(bern, std::abs(H.at(n1, n2)) / a);
        }
    res.bernoulli = bern;
    return res;
}

}  // namespace beltwave
