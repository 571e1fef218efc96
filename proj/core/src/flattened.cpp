#include "beltwave/flattened.hpp"

#include <cmath>
#include <numbers>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

ScalarSlabField flattened_div(const Field3D& field, const Discretization& disc) {
    const int M = disc.cheb().size();
    ScalarSlabField div(M, disc.num_modes());
    const Eigen::MatrixXd& D = disc.cheb().diff();
    div = D * field.component(2);
    for (int idx = 0; idx < disc.num_modes(); ++idx) {
        const Eigen::Vector2d k = disc.mode(idx).k;
        div.col(idx) += kI * (k.x() * field.component(0).col(idx) + k.y() * field.component(1).col(idx));
    }
    return div;
}

Field3D plain_curl(const Field3D& field, const Discretization& disc) {
    const int M = disc.cheb().size();
    Field3D out(field.truncation(), M);
    const Eigen::MatrixXd& D = disc.cheb().diff();
    const Eigen::MatrixXcd d1 = D * field.component(0);
    const Eigen::MatrixXcd d2 = D * field.component(1);
    for (int idx = 0; idx < disc.num_modes(); ++idx) {
        const Eigen::Vector2d k = disc.mode(idx).k;
        out.component(0).col(idx) =
            kI * k.y() * field.component(2).col(idx) - d2.col(idx);
        out.component(1).col(idx) =
            d1.col(idx) - kI * k.x() * field.component(2).col(idx);
        out.component(2).col(idx) =
            kI * (k.x() * field.component(1).col(idx) - k.y() * field.component(0).col(idx));
    }
    return out;
}

Field3D covariant_components(const Field3D& field, const FlattenedGeometry& geom,
                             const Discretization& disc) {
    const auto& ft = disc.padded();
    const int M = disc.cheb().size();
    const int P = ft.points();
    Field3D out(field.truncation(), M);
    const int dim = 2 * field.truncation() + 1;
    Eigen::MatrixXcd coeff(dim, dim);

    auto mode_matrix = [&](const Eigen::MatrixXcd& comp, int zi) {
        for (int i1 = 0; i1 < dim; ++i1)
            for (int i2 = 0; i2 < dim; ++i2) coeff(i1, i2) = comp(zi, i1 * dim + i2);
        return ft.synthesize(coeff);
    };
    auto store = [&](Eigen::MatrixXcd& comp, int zi, const Eigen::MatrixXcd& values) {
        const Eigen::MatrixXcd c = ft.analyze(values);
        for (int i1 = 0; i1 < dim; ++i1)
            for (int i2 = 0; i2 < dim; ++i2) comp(zi, i1 * dim + i2) = c(i1, i2);
    };

    Eigen::MatrixXcd u1(P, P), u2(P, P), u3(P, P);
    for (int zi = 0; zi < M; ++zi) {
        u1 = mode_matrix(field.component(0), zi);
        u2 = mode_matrix(field.component(1), zi);
        u3 = mode_matrix(field.component(2), zi);
        const auto& G = geom.metric(zi);
        store(out.component(0), zi,
              (G[0].array() * u1.array() + G[1].array() * u2.array() + G[2].array() * u3.array())
                  .matrix());
        store(out.component(1), zi,
              (G[1].array() * u1.array() + G[3].array() * u2.array() + G[4].array() * u3.array())
                  .matrix());
        store(out.component(2), zi,
              (G[2].array() * u1.array() + G[4].array() * u2.array() + G[5].array() * u3.array())
                  .matrix());
    }
    return out;
}

Field3D flattened_curl(const Field3D& field, const FlattenedGeometry& geom,
                       const Discretization& disc) {
    return plain_curl(covariant_components(field, geom, disc), disc);
}

Field3D nonlinearity_N(const Field3D& field, const FlattenedGeometry& geom,
                       const Discretization& disc) {
    Field3D a = covariant_components(field, geom, disc);
    Field3D out = field;
    out -= a;
    return out;
}

SurfaceField nonlinearity_B(const Field3D& field, const FlattenedGeometry& geom,
                            const Discretization& disc) {
    const auto& ft = disc.padded();
    const int dim = 2 * field.truncation() + 1;
    Eigen::MatrixXcd coeff(dim, dim);
    auto surface_values = [&](const Eigen::MatrixXcd& comp) {
        for (int i1 = 0; i1 < dim; ++i1)
            for (int i2 = 0; i2 < dim; ++i2) coeff(i1, i2) = comp(0, i1 * dim + i2);
        return ft.synthesize(coeff);  // z index 0 is the surface node
    };
    const Eigen::MatrixXcd u1 = surface_values(field.component(0));
    const Eigen::MatrixXcd u2 = surface_values(field.component(1));
    const Eigen::MatrixXcd u3 = surface_values(field.component(2));
    // At zdot = 0 the stretch (z+d)/d equals 1.
    const Eigen::ArrayXXcd a3 = geom.eta_x().array() * u1.array() +
                                geom.eta_y().array() * u2.array() +
                                geom.jac().array() * u3.array();
    const Eigen::ArrayXXcd b =
        (u1.array().square() + u2.array().square() + a3.square()) / geom.jac().array().square();
    return ft.analyze_field(b.matrix());
}

Field3D laminar_field(const LaminarFlow& flow, const PhysicalParams& params,
                      const Discretization& disc) {
    const int M = disc.cheb().size();
    Field3D out(disc.truncation(), M);
    for (int j = 0; j < M; ++j) {
        const Eigen::Vector3d u = laminar_eval(flow, params, disc.cheb().nodes()[j]);
        out.profile(0, 0, 0)[j] = u.x();
        out.profile(1, 0, 0)[j] = u.y();
    }
    return out;
}

Field3D linear_shift_L(const SurfaceField& eta, const LaminarFlow& flow,
                       const PhysicalParams& params, const Discretization& disc) {
    const int M = disc.cheb().size();
    const int N = disc.truncation();
    Field3D out(N, M);
    const double d = disc.cheb().depth();
    Eigen::VectorXd U1(M), U2(M), stretch(M);
    for (int j = 0; j < M; ++j) {
        const Eigen::Vector3d u = laminar_eval(flow, params, disc.cheb().nodes()[j]);
        U1[j] = u.x();
        U2[j] = u.y();
        stretch[j] = (disc.cheb().nodes()[j] + d) / d;
    }
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const Complex e = eta.at(n1, n2);
            if (e == Complex(0.0)) continue;
            const Eigen::Vector2d k = disc.lattice().wave_vector(n1, n2);
            const int idx = disc.mode_index(n1, n2);
            out.component(0).col(idx) = (e / d) * U1;
            out.component(1).col(idx) = (e / d) * U2;
            out.component(2).col(idx) =
                -kI * e * (k.x() * stretch.cwiseProduct(U1) + k.y() * stretch.cwiseProduct(U2));
        }
    return out;
}

ShiftData shift_data(const SurfaceField& eta, const LaminarFlow& flow,
                     const PhysicalParams& params, const Discretization& disc) {
    const double ad = params.alpha * params.d;
    if (params.alpha != 0.0) {
        const double m = std::round(ad / kTwoPi);
        if (m != 0.0 && std::abs(ad - m * kTwoPi) < 1e-8)
            throw PreconditionError("shift_data: alpha d in 2 pi Z \\ {0}, c~ system singular");
    }

    ShiftData shift;
    const int M = disc.cheb().size();
    const int N = disc.truncation();
    const double d = disc.cheb().depth();

    // w^eta: horizontal components (eta/d) U_j + eta P U_j', i.e. the
    // L~ horizontals plus the alpha rotation; vertical equals L~'s vertical.
    shift.w_eta = Field3D(N, M);
    Eigen::VectorXd U1(M), U2(M), stretch(M);
    for (int j = 0; j < M; ++j) {
        const Eigen::Vector3d u = laminar_eval(flow, params, disc.cheb().nodes()[j]);
        U1[j] = u.x();
        U2[j] = u.y();
        stretch[j] = (disc.cheb().nodes()[j] + d) / d;
    }
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const Complex e = eta.at(n1, n2);
            if (e == Complex(0.0)) continue;
            const Eigen::Vector2d k = disc.lattice().wave_vector(n1, n2);
            const int idx = disc.mode_index(n1, n2);
            shift.w_eta.component(0).col(idx) =
                e * (U1 / d + params.alpha * stretch.cwiseProduct(U2));
            shift.w_eta.component(1).col(idx) =
                e * (U2 / d - params.alpha * stretch.cwiseProduct(U1));
            shift.w_eta.component(2).col(idx) =
                -kI * e * (k.x() * stretch.cwiseProduct(U1) + k.y() * stretch.cwiseProduct(U2));
        }

    // Right-hand side (per unit cell area):
    //   r_j = int [ U_j(zeta) - U_j(z) ] (eta+d)/d - U_j'(z) eta (z+d)/d dV,
    // zeta = z + eta (z/d + 1), by padded-grid x Clenshaw-Curtis quadrature.
    const auto& ft = disc.padded();
    const int P = ft.points();
    const Eigen::MatrixXd eta_grid = ft.synthesize(eta).real();
    if (eta_grid.minCoeff() <= -d)
        throw DegenerateDomainError("shift_data: eta <= -d on the collocation grid");
    Eigen::Vector2d r = Eigen::Vector2d::Zero();
    const auto& wq = disc.cheb().quadrature();
    for (int j = 0; j < M; ++j) {
        const double z = disc.cheb().nodes()[j];
        const Eigen::Vector3d U = laminar_eval(flow, params, z);
        // U' = alpha (U2, -U1, 0)
        const double dU1 = params.alpha * U.y();
        const double dU2 = -params.alpha * U.x();
        double sum1 = 0.0, sum2 = 0.0;
        for (int p1 = 0; p1 < P; ++p1)
            for (int p2 = 0; p2 < P; ++p2) {
                const double e = eta_grid(p1, p2);
                const double zeta = z + e * (z / d + 1.0);
                const double az = params.alpha * zeta;
                const double c = std::cos(az), s = std::sin(az);
                const double U1z = flow.c1 * c + flow.c2 * s;
                const double U2z = -flow.c1 * s + flow.c2 * c;
                const double jac = (e + d) / d;
                sum1 += (U1z - U.x()) * jac - dU1 * e * stretch[j];
                sum2 += (U2z - U.y()) * jac - dU2 * e * stretch[j];
            }
        r.x() += wq[j] * sum1 / (P * P);
        r.y() += wq[j] * sum2 / (P * P);
    }

    Eigen::Matrix2d Mc;
    if (params.alpha == 0.0) {
        Mc << d, 0.0, 0.0, d;
    } else {
        const double sa = std::sin(ad) / params.alpha;
        const double ca = (std::cos(ad) - 1.0) / params.alpha;
        Mc << sa, ca, -ca, sa;
    }
    shift.c_tilde = Mc.partialPivLu().solve(r);
    shift.U_tilde = {shift.c_tilde.x(), shift.c_tilde.y()};
    return shift;
}

}  // namespace beltwave
