#include "beltwave/calpha.hpp"

#include <cmath>
#include <numbers>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);

Eigen::VectorXcd solve_real_lu(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                               const Eigen::VectorXcd& rhs) {
    return lu.solve(rhs.real()).cast<Complex>() + kI * lu.solve(rhs.imag()).cast<Complex>();
}
}  // namespace

CAlphaOperator::CAlphaOperator(const Discretization& disc, const PhysicalParams& params)
    : disc_(disc), params_(params) {
    const int M = disc_.cheb().size();
    const double d = disc_.cheb().depth();
    const double a2 = params_.alpha * params_.alpha;

    // Lemma hypothesis: sqrt(alpha^2 - |k|^2) not in (pi/d) Z+ for any mode.
    for (int idx = 0; idx < disc_.num_modes(); ++idx) {
        const double t = a2 - disc_.k_squared(idx);
        if (t <= 0.0) continue;
        const double v = std::sqrt(t) * d;
        const double m = std::max(1.0, std::round(v / kPi));
        if (std::abs(v - m * kPi) < 1e-8)
            throw ResonanceError("CAlphaOperator: resonant vertical eigenvalue at a lattice mode");
    }

    const Eigen::MatrixXd& D2 = disc_.cheb().diff2();
    bvp_.resize(disc_.num_modes());
    for (int idx = 0; idx < disc_.num_modes(); ++idx) {
        const double k2 = disc_.k_squared(idx);
        if (k2 == 0.0) continue;
        Eigen::MatrixXd A = D2 + (a2 - k2) * Eigen::MatrixXd::Identity(M, M);
        A.row(0).setZero();
        A(0, 0) = 1.0;  // surface Dirichlet row
        A.row(M - 1).setZero();
        A(M - 1, M - 1) = 1.0;  // bottom Dirichlet row
        bvp_[idx].compute(A);
    }

    // k = 0: first-order system (v1' - alpha v2, v2' + alpha v1) with the two
    // integral conditions appended; bordered with the laminar kernel columns.
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(2 * M + 2, 2 * M + 2);
    const Eigen::MatrixXd& D = disc_.cheb().diff();
    B.block(0, 0, M, M) = D;
    B.block(0, M, M, M) = -params_.alpha * Eigen::MatrixXd::Identity(M, M);
    B.block(M, 0, M, M) = params_.alpha * Eigen::MatrixXd::Identity(M, M);
    B.block(M, M, M, M) = D;
    for (int j = 0; j < M; ++j) {
        const double az = params_.alpha * disc_.cheb().nodes()[j];
        B(j, 2 * M) = std::cos(az);
        B(j, 2 * M + 1) = std::sin(az);
        B(M + j, 2 * M) = -std::sin(az);
        B(M + j, 2 * M + 1) = std::cos(az);
    }
    B.block(2 * M, 0, 1, M) = disc_.cheb().quadrature().transpose();
    B.block(2 * M + 1, M, 1, M) = disc_.cheb().quadrature().transpose();
    zero_mode_.compute(B);
}

CurlRHS CAlphaOperator::apply(const Field3D& v) const {
    CurlRHS rhs;
    rhs.w = plain_curl(v, disc_);
    Field3D av = v;
    av *= params_.alpha;
    rhs.w -= av;
    rhs.f = SurfaceField(disc_.truncation());
    const int N = disc_.truncation();
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2)
            rhs.f.at(n1, n2) = v.component(2)(0, disc_.mode_index(n1, n2));
    return rhs;
}

Field3D CAlphaOperator::solve(const CurlRHS& rhs, double div_tol) const {
    const double divres = rhs.divergence_residual(disc_);
    if (divres > div_tol)
        throw PreconditionError("CAlphaOperator::solve: rhs field is not divergence-free");

    const int M = disc_.cheb().size();
    const int N = disc_.truncation();
    Field3D v(N, M);
    const Eigen::MatrixXd& D = disc_.cheb().diff();

    for (int idx = 0; idx < disc_.num_modes(); ++idx) {
        const ModeIndex& mode = disc_.mode(idx);
        const double k2 = disc_.k_squared(idx);
        const Eigen::VectorXcd w1 = rhs.w.component(0).col(idx);
        const Eigen::VectorXcd w2 = rhs.w.component(1).col(idx);
        const Eigen::VectorXcd w3 = rhs.w.component(2).col(idx);
        const Complex f = rhs.f.at(mode.n1, mode.n2);

        if (k2 == 0.0) {
            if (w3.cwiseAbs().maxCoeff() > div_tol || std::abs(f) > div_tol)
                throw PreconditionError(
                    "CAlphaOperator::solve: zero-mode rhs violates the odd symmetry class");
            Eigen::VectorXcd b(2 * M + 2);
            b.head(M) = w2;
            b.segment(M, M) = -w1;
            b.tail(2).setZero();
            const Eigen::VectorXcd sol = solve_real_lu(zero_mode_, b);
            v.component(0).col(idx) = sol.head(M);
            v.component(1).col(idx) = sol.segment(M, M);
            continue;
        }

        const double kx = mode.k.x(), ky = mode.k.y();
        // v3'' + (alpha^2 - |k|^2) v3 = i ky w1 - i kx w2 - alpha w3
        Eigen::VectorXcd f3 = kI * (ky * w1 - kx * w2) - params_.alpha * w3;
        f3[0] = f;
        f3[M - 1] = 0.0;
        const Eigen::VectorXcd v3 = solve_real_lu(bvp_[idx], f3);
        const Eigen::VectorXcd dv3 = D * v3;
        v.component(2).col(idx) = v3;
        v.component(0).col(idx) =
            (kI * ky * w3 + kI * params_.alpha * ky * v3 + kI * kx * dv3) / k2;
        v.component(1).col(idx) =
            (-kI * kx * w3 - kI * params_.alpha * kx * v3 + kI * ky * dv3) / k2;
    }
    return v;
}

}  // namespace beltwave
