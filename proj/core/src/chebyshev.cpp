#include "beltwave/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
constexpr double kPi = std::numbers::pi;
}

ChebyshevGrid::ChebyshevGrid(int num_nodes, double depth) : M_(num_nodes), d_(depth) {
    if (M_ < 3) throw PreconditionError("ChebyshevGrid: need at least 3 nodes");
    if (!(d_ > 0.0)) throw PreconditionError("ChebyshevGrid: depth must be positive");
    const int n = M_ - 1;

    x_.resize(M_);
    z_.resize(M_);
    for (int j = 0; j <= n; ++j) {
        x_[j] = std::cos(j * kPi / n);
        z_[j] = 0.5 * d_ * (x_[j] - 1.0);  // x=1 -> z=0 (surface), x=-1 -> z=-d (bottom)
    }
    // exact endpoints
    z_[0] = 0.0;
    z_[n] = -d_;

    bary_.resize(M_);
    for (int j = 0; j <= n; ++j) {
        bary_[j] = (j % 2 == 0 ? 1.0 : -1.0);
        if (j == 0 || j == n) bary_[j] *= 0.5;
    }

    // Standard differentiation matrix with the negative-sum trick, scaled to z.
    Eigen::MatrixXd Dx(M_, M_);
    auto c = [&](int j) { return (j == 0 || j == n) ? 2.0 : 1.0; };
    for (int i = 0; i <= n; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            Dx(i, j) = (c(i) / c(j)) * sign / (x_[i] - x_[j]);
            rowsum += Dx(i, j);
        }
        Dx(i, i) = -rowsum;
    }
    D_ = (2.0 / d_) * Dx;
    D2_ = D_ * D_;

    // Clenshaw-Curtis weights on [-1,1], scaled by d/2.
    w_.resize(M_);
    for (int j = 0; j <= n; ++j) {
        double s = 1.0;
        for (int m = 1; m <= n / 2; ++m) {
            const double b = (2 * m == n) ? 1.0 : 2.0;
            s -= b * std::cos(2.0 * m * j * kPi / n) / (4.0 * m * m - 1.0);
        }
        const double cj = (j == 0 || j == n) ? 1.0 : 2.0;
        w_[j] = (cj / n) * s * (0.5 * d_);
    }

    // Discrete cosine transforms between nodal values and Chebyshev coefficients.
    vals2coef_.resize(M_, M_);
    coef2vals_.resize(M_, M_);
    for (int m = 0; m <= n; ++m) {
        const double cm = (m == 0 || m == n) ? 2.0 : 1.0;
        for (int j = 0; j <= n; ++j) {
            const double cj = (j == 0 || j == n) ? 2.0 : 1.0;
            vals2coef_(m, j) = (2.0 / (n * cm * cj)) * std::cos(m * j * kPi / n);
            coef2vals_(j, m) = std::cos(m * j * kPi / n);
        }
    }
}

Eigen::VectorXcd ChebyshevGrid::to_coefficients(const Eigen::VectorXcd& values) const {
    return vals2coef_ * values;
}

Eigen::VectorXcd ChebyshevGrid::to_values(const Eigen::VectorXcd& coeffs) const {
    return coef2vals_ * coeffs;
}

double ChebyshevGrid::evaluate(const Eigen::VectorXd& values, double z) const {
    return evaluate(values.cast<std::complex<double>>().eval(), z).real();
}

std::complex<double> ChebyshevGrid::evaluate(const Eigen::VectorXcd& values, double z) const {
    const double x = 1.0 + 2.0 * z / d_;
    std::complex<double> num = 0.0;
    double den = 0.0;
    for (int j = 0; j < M_; ++j) {
        const double diff = x - x_[j];
        if (std::abs(diff) < 1e-14) return values[j];
        const double t = bary_[j] / diff;
        num += t * values[j];
        den += t;
    }
    return num / den;
}

Eigen::VectorXcd ChebyshevGrid::antiderivative_from_bottom(const Eigen::VectorXcd& values) const {
    const int n = M_ - 1;
    const Eigen::VectorXcd a = to_coefficients(values);
    // Antiderivative recurrence in Chebyshev coefficients, then scale dx -> dz.
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(M_ + 1);
    for (int m = 1; m <= n + 1; ++m) {
        const std::complex<double> am1 = a[m - 1];
        const std::complex<double> ap1 = (m + 1 <= n) ? a[m + 1] : std::complex<double>(0.0);
        b[m] = (am1 - ap1) / (2.0 * m) * (0.5 * d_);
    }
    // Values of sum b_m T_m at nodes, offset so the bottom value is zero.
    Eigen::VectorXcd out(M_);
    for (int j = 0; j < M_; ++j) {
        // Clenshaw evaluation of the degree-(n+1) series at x_[j].
        std::complex<double> u1 = 0.0, u2 = 0.0;
        for (int m = n + 1; m >= 1; --m) {
            std::complex<double> u = 2.0 * x_[j] * u1 - u2 + b[m];
            u2 = u1;
            u1 = u;
        }
        out[j] = x_[j] * u1 - u2 + b[0];
    }
    const std::complex<double> bottom = out[n];
    for (int j = 0; j < M_; ++j) out[j] -= bottom;
    return out;
}

Eigen::VectorXd ChebyshevGrid::antiderivative_from_bottom(const Eigen::VectorXd& values) const {
    return antiderivative_from_bottom(values.cast<std::complex<double>>().eval()).real();
}

}  // namespace beltwave
