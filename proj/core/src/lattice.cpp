#include "beltwave/lattice.hpp"

#include <cmath>
#include <numbers>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_independent(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const char* what) {
    const double det = a.x() * b.y() - a.y() * b.x();
    const double scale = a.norm() * b.norm();
    if (scale == 0.0 || std::abs(det) <= 1e-12 * scale)
        throw PreconditionError(std::string(what) + ": generators must be linearly independent");
}
}  // namespace

Lattice Lattice::from_generators(const Eigen::Vector2d& lambda1, const Eigen::Vector2d& lambda2) {
    check_independent(lambda1, lambda2, "Lattice::from_generators");
    Lattice lat;
    lat.lambda1_ = lambda1;
    lat.lambda2_ = lambda2;
    Eigen::Matrix2d L;
    L.col(0) = lambda1;
    L.col(1) = lambda2;
    // K^T L = 2 pi I  =>  K = 2 pi L^{-T}
    const Eigen::Matrix2d K = kTwoPi * L.inverse().transpose();
    lat.k1_ = K.col(0);
    lat.k2_ = K.col(1);
    return lat;
}

Lattice Lattice::from_dual(const Eigen::Vector2d& k1, const Eigen::Vector2d& k2) {
    check_independent(k1, k2, "Lattice::from_dual");
    Lattice lat;
    lat.k1_ = k1;
    lat.k2_ = k2;
    Eigen::Matrix2d K;
    K.col(0) = k1;
    K.col(1) = k2;
    const Eigen::Matrix2d L = kTwoPi * K.inverse().transpose();
    lat.lambda1_ = L.col(0);
    lat.lambda2_ = L.col(1);
    return lat;
}

double Lattice::cell_area() const {
    return std::abs(lambda1_.x() * lambda2_.y() - lambda1_.y() * lambda2_.x());
}

double Lattice::min_dual_length() const {
    // The shortest vector of a 2D lattice appears among small coefficient
    // combinations of any (not necessarily reduced) basis; scan a box.
    double best = std::numeric_limits<double>::infinity();
    for (int n1 = -3; n1 <= 3; ++n1)
        for (int n2 = -3; n2 <= 3; ++n2) {
            if (n1 == 0 && n2 == 0) continue;
            best = std::min(best, wave_vector(n1, n2).norm());
        }
    return best;
}

double Lattice::duality_residual() const {
    const Eigen::Vector2d ks[2] = {k1_, k2_};
    const Eigen::Vector2d ls[2] = {lambda1_, lambda2_};
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double target = (i == j) ? kTwoPi : 0.0;
            worst = std::max(worst, std::abs(ks[i].dot(ls[j]) - target) / kTwoPi);
        }
    return worst;
}

std::vector<ModeIndex> lattice_enumerate(const Lattice& lat, double radius) {
    if (!(radius > 0.0)) throw PreconditionError("lattice_enumerate: radius must be positive");
    // |n_i| = |k . lambda_i| / (2 pi) <= radius |lambda_i| / (2 pi)
    const int b1 = static_cast<int>(std::floor(radius * lat.lambda1().norm() / kTwoPi)) + 1;
    const int b2 = static_cast<int>(std::floor(radius * lat.lambda2().norm() / kTwoPi)) + 1;
    std::vector<ModeIndex> out;
    for (int n1 = -b1; n1 <= b1; ++n1)
        for (int n2 = -b2; n2 <= b2; ++n2) {
            const Eigen::Vector2d k = lat.wave_vector(n1, n2);
            if (k.norm() <= radius) out.push_back({n1, n2, k});
        }
    return out;
}

}  // namespace beltwave
