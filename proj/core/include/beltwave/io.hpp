#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "beltwave/discretization.hpp"
#include "beltwave/field.hpp"
#include "beltwave/fourier.hpp"
#include "beltwave/params.hpp"

namespace beltwave {

/// Parsed run configuration (JSON file; see README for the schema).
struct RunConfig {
    PhysicalParams params;
    Eigen::Vector2d k1 = Eigen::Vector2d::Zero();  ///< dual generators (derived if lambdas given)
    Eigen::Vector2d k2 = Eigen::Vector2d::Zero();
    int truncation = 8;
    int z_nodes = 32;
    double tol = 1e-8;

    int curve_samples = 64;                  ///< dispersion subcommand
    std::vector<double> kappa_table;         ///< |k| values for the kappa table
    std::vector<Eigen::Vector2d> seeds;      ///< extra seeds for bifurcate
    std::vector<Eigen::Vector2d> t_grid;     ///< solve subcommand amplitudes
    std::optional<Eigen::Vector2d> c_state;  ///< kernel/check parameter pair (default: certified c*)
    double kernel_eta_hat = 0.5;
    std::string eta_file;    ///< check: surface coefficient CSV
    std::string field_file;  ///< extract: field coefficient CSV
    std::string psi_file;    ///< lift: stream function CSV
    Eigen::Vector2d lift_direction = Eigen::Vector2d::UnitX();
    double lift_k0 = 0.0;
    double lift_beta = 0.0;

    Lattice lattice() const { return Lattice::from_dual(k1, k2); }
};

RunConfig load_config(const std::string& path);

/// Full round-trip precision formatting used by every CSV writer.
std::string format_number(double v);

/// Field dump: columns x,y,z,u1,u2,u3 sampled on the collocation grid.
void write_field_csv(const std::string& path, const Field3D& field, const Discretization& disc);

/// Coefficient dump: columns n1,n2,z_index,component,re,im.
void write_field_coefficients_csv(const std::string& path, const Field3D& field);
Field3D read_field_coefficients_csv(const std::string& path, int truncation, int z_nodes);

/// Surface coefficient table: columns n1,n2,value.
void write_surface_csv(const std::string& path, const SurfaceProfile& eta);
SurfaceProfile read_surface_csv(const std::string& path, int truncation);

/// Stream function dump: columns m,z_index,re,im.
void write_stream_function_csv(const std::string& path, const Eigen::MatrixXcd& psi);
Eigen::MatrixXcd read_stream_function_csv(const std::string& path, int truncation, int z_nodes);

}  // namespace beltwave
