#include "beltwave/geometry.hpp"

#include <complex>

#include "beltwave/errors.hpp"

namespace beltwave {

FlattenBasis flatten_geometry(const SurfaceProfile& eta, const Lattice& lat, double depth,
                              const Eigen::Vector2d& xp, double zdot) {
    if (zdot < -depth - 1e-12 || zdot > 1e-12)
        throw PreconditionError("flatten_geometry: zdot outside [-d, 0]");
    const double e = eta.evaluate(lat, xp);
    if (e <= -depth) throw DegenerateDomainError("flatten_geometry: eta(x') <= -d");
    const Eigen::Vector2d grad = eta.gradient(lat, xp);
    const double stretch = (zdot + depth) / depth;
    FlattenBasis b;
    b.f1 = {1.0, 0.0, grad.x() * stretch};
    b.f2 = {0.0, 1.0, grad.y() * stretch};
    b.f3 = {0.0, 0.0, (e + depth) / depth};
    b.J = (e + depth) / depth;
    return b;
}

FlattenedGeometry::FlattenedGeometry(const SurfaceField& eta, const Discretization& disc) {
    const auto& ft = disc.padded();
    const double d = disc.cheb().depth();

    // eta and its gradient on the padded grid via Fourier multipliers
    SurfaceField ex(eta.truncation()), ey(eta.truncation());
    const int N = eta.truncation();
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const Eigen::Vector2d k = disc.lattice().wave_vector(n1, n2);
            const std::complex<double> ik(0.0, 1.0);
            ex.at(n1, n2) = ik * k.x() * eta.at(n1, n2);
            ey.at(n1, n2) = ik * k.y() * eta.at(n1, n2);
        }
    eta_ = ft.synthesize(eta).real();
    etax_ = ft.synthesize(ex).real();
    etay_ = ft.synthesize(ey).real();

    min_eta_ = eta_.minCoeff();
    if (min_eta_ <= -d * (1.0 - 1e-12))
        throw DegenerateDomainError("FlattenedGeometry: eta <= -d on the collocation grid");

    J_ = (eta_.array() / d + 1.0).matrix();

    const int M = disc.cheb().size();
    G_.resize(M);
    Eigen::MatrixXd Jinv = J_.cwiseInverse();
    for (int zi = 0; zi < M; ++zi) {
        const double p = (disc.cheb().nodes()[zi] + d) / d;  // (z + d)/d
        auto& G = G_[zi];
        const Eigen::ArrayXXd px = p * etax_.array();
        const Eigen::ArrayXXd py = p * etay_.array();
        G[0] = ((1.0 + px * px) * Jinv.array()).matrix();  // G11
        G[1] = ((px * py) * Jinv.array()).matrix();        // G12
        G[2] = px.matrix();                                // G13 = eta_x p
        G[3] = ((1.0 + py * py) * Jinv.array()).matrix();  // G22
        G[4] = py.matrix();                                // G23 = eta_y p
        G[5] = J_;                                         // G33 = J
    }
}

}  // namespace beltwave
