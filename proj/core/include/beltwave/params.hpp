#pragma once

#include <cmath>

#include <Eigen/Dense>

#include "beltwave/errors.hpp"

namespace beltwave {

/// Fixed problem constants: gravity, surface tension, still-water depth and
/// the Beltrami proportionality constant alpha (curl u = alpha u).
struct PhysicalParams {
    double g = 1.0;      ///< gravitational acceleration
    double sigma = 1.0;  ///< surface tension coefficient, > 0
    double d = 1.0;      ///< still-water depth, > 0
    double alpha = 0.0;  ///< Beltrami constant, any real including 0

    void validate() const {
        if (!(g > 0.0)) throw PreconditionError("PhysicalParams: g must be positive");
        if (!(sigma > 0.0)) throw PreconditionError("PhysicalParams: sigma must be positive");
        if (!(d > 0.0)) throw PreconditionError("PhysicalParams: d must be positive");
        if (!std::isfinite(alpha)) throw PreconditionError("PhysicalParams: alpha must be finite");
    }
};

/// Shear coefficients of the laminar flow family U[c1,c2] = c1 U1 + c2 U2 with
/// U1 = (cos(alpha z), -sin(alpha z), 0), U2 = (sin(alpha z), cos(alpha z), 0).
struct LaminarFlow {
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Evaluates the laminar flow at height z in [-d, 0]. Third component is exactly zero.
inline Eigen::Vector3d laminar_eval(const LaminarFlow& flow, const PhysicalParams& params, double z) {
    const double az = params.alpha * z;
    const double c = std::cos(az), s = std::sin(az);
    return {flow.c1 * c + flow.c2 * s, -flow.c1 * s + flow.c2 * c, 0.0};
}

/// Bernoulli constant of the laminar flow, Q = (c1^2 + c2^2)/2.
inline double bernoulli_Q(const LaminarFlow& flow) {
    return 0.5 * (flow.c1 * flow.c1 + flow.c2 * flow.c2);
}

}  // namespace beltwave
