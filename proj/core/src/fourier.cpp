#include "beltwave/fourier.hpp"

#include <cmath>
#include <numbers>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
using Complex = std::complex<double>;
}  // namespace

Complex SurfaceField::evaluate(const Lattice& lat, const Eigen::Vector2d& xp) const {
    Complex acc = 0.0;
    for (int n1 = -N_; n1 <= N_; ++n1)
        for (int n2 = -N_; n2 <= N_; ++n2) {
            const Complex v = at(n1, n2);
            if (v == Complex(0.0)) continue;
            const double phase = lat.wave_vector(n1, n2).dot(xp);
            acc += v * Complex(std::cos(phase), std::sin(phase));
        }
    return acc;
}

double SurfaceField::even_class_violation() const {
    double worst = 0.0;
    for (int n1 = -N_; n1 <= N_; ++n1)
        for (int n2 = -N_; n2 <= N_; ++n2) {
            const Complex a = at(n1, n2);
            const Complex b = at(-n1, -n2);
            worst = std::max(worst, std::abs(a - std::conj(b)));
            worst = std::max(worst, std::abs(a - b));
        }
    return worst;
}

double SurfaceField::odd_class_violation() const {
    double worst = 0.0;
    for (int n1 = -N_; n1 <= N_; ++n1)
        for (int n2 = -N_; n2 <= N_; ++n2) {
            const Complex a = at(n1, n2);
            const Complex b = at(-n1, -n2);
            worst = std::max(worst, std::abs(a - std::conj(b)));
            worst = std::max(worst, std::abs(a + b));
        }
    return worst;
}

double SurfaceProfile::evaluate(const Lattice& lat, const Eigen::Vector2d& xp) const {
    double acc = 0.0;
    for (int n1 = -N_; n1 <= N_; ++n1)
        for (int n2 = -N_; n2 <= N_; ++n2) {
            const double v = get(n1, n2);
            if (v == 0.0) continue;
            acc += v * std::cos(lat.wave_vector(n1, n2).dot(xp));
        }
    return acc;
}

Eigen::Vector2d SurfaceProfile::gradient(const Lattice& lat, const Eigen::Vector2d& xp) const {
    Eigen::Vector2d acc = Eigen::Vector2d::Zero();
    for (int n1 = -N_; n1 <= N_; ++n1)
        for (int n2 = -N_; n2 <= N_; ++n2) {
            const double v = get(n1, n2);
            if (v == 0.0) continue;
            const Eigen::Vector2d k = lat.wave_vector(n1, n2);
            acc -= v * std::sin(k.dot(xp)) * k;
        }
    return acc;
}

SurfaceField SurfaceProfile::to_field() const {
    SurfaceField f(N_);
    f.coeffs() = c_.cast<Complex>();
    return f;
}

SurfaceProfile SurfaceProfile::from_field(const SurfaceField& f, double* leakage) {
    SurfaceProfile p(f.truncation());
    const int N = f.truncation();
    double worst = 0.0;
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const Complex a = f.at(n1, n2);
            const Complex b = f.at(-n1, -n2);
            const double sym = 0.5 * (a.real() + b.real());
            worst = std::max({worst, std::abs(a.imag()), std::abs(a.real() - sym)});
            p.c_(n1 + N, n2 + N) = sym;
        }
    if (leakage) *leakage = worst;
    return p;
}

PaddedTransform::PaddedTransform(int truncation, int pad_points) : N_(truncation), P_(pad_points) {
    const int dim = 2 * N_ + 1;
    if (P_ < dim) throw PreconditionError("PaddedTransform: pad grid smaller than mode count");
    synth_.resize(P_, dim);
    analyze_.resize(dim, P_);
    for (int p = 0; p < P_; ++p)
        for (int i = 0; i < dim; ++i) {
            const double phase = kTwoPi * p * (i - N_) / P_;
            synth_(p, i) = Complex(std::cos(phase), std::sin(phase));
            analyze_(i, p) = std::conj(synth_(p, i)) / double(P_);
        }
}

Eigen::MatrixXcd PaddedTransform::synthesize(const Eigen::MatrixXcd& coeffs) const {
    return synth_ * coeffs * synth_.transpose();
}

Eigen::MatrixXcd PaddedTransform::analyze(const Eigen::MatrixXcd& values) const {
    return analyze_ * values * analyze_.transpose();
}

SurfaceField PaddedTransform::analyze_field(const Eigen::MatrixXcd& values) const {
    SurfaceField f(N_);
    f.coeffs() = analyze(values);
    return f;
}

}  // namespace beltwave
