#include "beltwave/field.hpp"

#include "beltwave/discretization.hpp"
#include "beltwave/errors.hpp"

namespace beltwave {

Field3D::Field3D(int truncation, int z_nodes) : N_(truncation), M_(z_nodes) {
    for (auto& c : comp_) c = Eigen::MatrixXcd::Zero(M_, num_modes());
}

void Field3D::set_zero() {
    for (auto& c : comp_) c.setZero();
}

double Field3D::sup_coefficient() const {
    double s = 0.0;
    for (const auto& c : comp_) s = std::max(s, c.cwiseAbs().maxCoeff());
    return s;
}

double Field3D::distance(const Field3D& other) const {
    double s = 0.0;
    for (int j = 0; j < 3; ++j) s = std::max(s, (comp_[j] - other.comp_[j]).cwiseAbs().maxCoeff());
    return s;
}

double Field3D::class_violation() const {
    double worst = 0.0;
    for (int n1 = -N_; n1 <= N_; ++n1)
        for (int n2 = -N_; n2 <= N_; ++n2) {
            const int ip = mode_index(n1, n2);
            const int im = mode_index(-n1, -n2);
            for (int j = 0; j < 3; ++j) {
                const auto a = comp_[j].col(ip);
                const auto b = comp_[j].col(im);
                // realness of the physical field
                worst = std::max(worst, (a - b.conjugate()).cwiseAbs().maxCoeff());
                // even (j=0,1) / odd (j=2) symmetry in x'
                const double sign = (j == 2) ? -1.0 : 1.0;
                worst = std::max(worst, (a - sign * b).cwiseAbs().maxCoeff());
            }
        }
    return worst;
}

Field3D& Field3D::operator+=(const Field3D& o) {
    for (int j = 0; j < 3; ++j) comp_[j] += o.comp_[j];
    return *this;
}

Field3D& Field3D::operator-=(const Field3D& o) {
    for (int j = 0; j < 3; ++j) comp_[j] -= o.comp_[j];
    return *this;
}

Field3D& Field3D::operator*=(double s) {
    for (auto& c : comp_) c *= s;
    return *this;
}

Eigen::Vector3cd eval_field_complex(const Field3D& field, const Discretization& disc,
                                    const Eigen::Vector2d& xp, double z) {
    const auto& cheb = disc.cheb();
    if (z > 1e-12 || z < -cheb.depth() - 1e-12)
        throw PreconditionError("eval_field: z outside [-d, 0]");
    Eigen::Vector3cd out = Eigen::Vector3cd::Zero();
    const int N = field.truncation();
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const double phase = disc.lattice().wave_vector(n1, n2).dot(xp);
            const std::complex<double> e(std::cos(phase), std::sin(phase));
            for (int j = 0; j < 3; ++j) {
                const Eigen::VectorXcd prof = field.profile(j, n1, n2);
                if (prof.isZero(0.0)) continue;
                out[j] += cheb.evaluate(prof, z) * e;
            }
        }
    return out;
}

Eigen::Vector3d eval_field(const Field3D& field, const Discretization& disc,
                           const Eigen::Vector2d& xp, double z) {
    return eval_field_complex(field, disc, xp, z).real();
}

}  // namespace beltwave
