#pragma once

#include <complex>

#include <Eigen/Dense>

#include "beltwave/lattice.hpp"

namespace beltwave {

/// Complex Fourier coefficients of a lattice-periodic surface scalar,
/// truncated to |n1|, |n2| <= N. Storage is a dense (2N+1)^2 matrix indexed
/// by (n1 + N, n2 + N).
class SurfaceField {
  public:
    SurfaceField() = default;
    explicit SurfaceField(int truncation)
        : N_(truncation), c_(Eigen::MatrixXcd::Zero(2 * truncation + 1, 2 * truncation + 1)) {}

    int truncation() const { return N_; }
    int dim() const { return 2 * N_ + 1; }

    std::complex<double>& at(int n1, int n2) { return c_(n1 + N_, n2 + N_); }
    std::complex<double> at(int n1, int n2) const { return c_(n1 + N_, n2 + N_); }
    bool contains(int n1, int n2) const { return std::abs(n1) <= N_ && std::abs(n2) <= N_; }

    Eigen::MatrixXcd& coeffs() { return c_; }
    const Eigen::MatrixXcd& coeffs() const { return c_; }

    /// Direct mode sum at a physical point x'.
    std::complex<double> evaluate(const Lattice& lat, const Eigen::Vector2d& xp) const;

    double sup_coefficient() const { return c_.cwiseAbs().maxCoeff(); }

    /// Deviation from the even real class: max |c(k) - conj(c(-k))| + max |Im c|
    /// over stored modes (zero for an even, real-valued function).
    double even_class_violation() const;
    /// Deviation from the odd class: max |c(k) + conj(c(-k))| + max |Re c|.
    double odd_class_violation() const;

    SurfaceField& operator+=(const SurfaceField& o) {
        c_ += o.c_;
        return *this;
    }
    SurfaceField& operator-=(const SurfaceField& o) {
        c_ -= o.c_;
        return *this;
    }
    SurfaceField& operator*=(double s) {
        c_ *= s;
        return *this;
    }

  private:
    int N_ = 0;
    Eigen::MatrixXcd c_;
};

/// Real even surface elevation eta as Fourier coefficients over the dual
/// lattice: eta_hat(k) = eta_hat(-k) real. Setting a mode writes both +k and -k.
class SurfaceProfile {
  public:
    SurfaceProfile() = default;
    explicit SurfaceProfile(int truncation)
        : N_(truncation), c_(Eigen::MatrixXd::Zero(2 * truncation + 1, 2 * truncation + 1)) {}

    int truncation() const { return N_; }

    void set(int n1, int n2, double value) {
        c_(n1 + N_, n2 + N_) = value;
        c_(-n1 + N_, -n2 + N_) = value;
    }
    double get(int n1, int n2) const { return c_(n1 + N_, n2 + N_); }

    const Eigen::MatrixXd& coeffs() const { return c_; }

    double evaluate(const Lattice& lat, const Eigen::Vector2d& xp) const;
    Eigen::Vector2d gradient(const Lattice& lat, const Eigen::Vector2d& xp) const;

    SurfaceField to_field() const;
    /// Projects the even real part of a SurfaceField; reports the discarded leakage.
    static SurfaceProfile from_field(const SurfaceField& f, double* leakage = nullptr);

  private:
    int N_ = 0;
    Eigen::MatrixXd c_;
};

/// Uniform collocation grid in lattice coordinates (a1, a2) in [0,1)^2 with
/// P >= 2(2N+1) points per direction, used for de-aliased pointwise products.
/// Synthesis and analysis are exact for data within the truncation.
class PaddedTransform {
  public:
    PaddedTransform() = default;
    PaddedTransform(int truncation, int pad_points);

    int truncation() const { return N_; }
    int points() const { return P_; }

    /// values(p1, p2) = sum_k c(k) exp(2 pi i (n1 p1 + n2 p2) / P)
    Eigen::MatrixXcd synthesize(const Eigen::MatrixXcd& coeffs) const;
    /// Truncating inverse of synthesize.
    Eigen::MatrixXcd analyze(const Eigen::MatrixXcd& values) const;

    Eigen::MatrixXcd synthesize(const SurfaceField& f) const { return synthesize(f.coeffs()); }
    SurfaceField analyze_field(const Eigen::MatrixXcd& values) const;

  private:
    int N_ = 0, P_ = 0;
    Eigen::MatrixXcd synth_;    // P x (2N+1)
    Eigen::MatrixXcd analyze_;  // (2N+1) x P
};

}  // namespace beltwave
