#include "beltwave/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "beltwave/errors.hpp"

namespace beltwave {

namespace {
using nlohmann::json;

Eigen::Vector2d parse_vec2(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError("config: key '" + key + "' must be a 2-element numeric array");
    return {j[0].get<double>(), j[1].get<double>()};
}

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError("config: missing or non-numeric key '" + key + "'");
    return j[key].get<double>();
}
}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: parse failure: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");

    RunConfig cfg;
    cfg.params.g = require_number(j, "g");
    cfg.params.sigma = require_number(j, "sigma");
    cfg.params.d = require_number(j, "d");
    cfg.params.alpha = require_number(j, "alpha");
    cfg.params.validate();

    if (j.contains("k1") && j.contains("k2")) {
        cfg.k1 = parse_vec2(j["k1"], "k1");
        cfg.k2 = parse_vec2(j["k2"], "k2");
    } else if (j.contains("lambda1") && j.contains("lambda2")) {
        const Lattice lat = Lattice::from_generators(parse_vec2(j["lambda1"], "lambda1"),
                                                     parse_vec2(j["lambda2"], "lambda2"));
        cfg.k1 = lat.k1();
        cfg.k2 = lat.k2();
    } else {
        throw ConfigError("config: need either k1/k2 or lambda1/lambda2");
    }

    cfg.truncation = static_cast<int>(j.value("truncation", 8));
    cfg.z_nodes = static_cast<int>(j.value("z_nodes", 32));
    cfg.tol = j.value("tol", 1e-8);
    if (cfg.truncation < 1 || cfg.truncation > 64) throw ConfigError("config: truncation out of range");
    if (cfg.z_nodes < 4 || cfg.z_nodes > 256) throw ConfigError("config: z_nodes out of range");

    if (j.contains("dispersion")) {
        const json& dj = j["dispersion"];
        cfg.curve_samples = static_cast<int>(dj.value("curve_samples", 64));
        if (dj.contains("kappa_table"))
            for (const auto& v : dj["kappa_table"]) cfg.kappa_table.push_back(v.get<double>());
    }
    if (j.contains("bifurcate") && j["bifurcate"].contains("seeds"))
        for (const auto& s : j["bifurcate"]["seeds"]) cfg.seeds.push_back(parse_vec2(s, "seeds"));
    if (j.contains("solve")) {
        const json& sj = j["solve"];
        if (!sj.contains("t_grid") || !sj["t_grid"].is_array())
            throw ConfigError("config: solve.t_grid must be an array of [t1,t2] pairs");
        for (const auto& t : sj["t_grid"]) cfg.t_grid.push_back(parse_vec2(t, "t_grid"));
    }
    if (j.contains("kernel")) {
        const json& kj = j["kernel"];
        if (kj.contains("c")) cfg.c_state = parse_vec2(kj["c"], "kernel.c");
        cfg.kernel_eta_hat = kj.value("eta_hat", 0.5);
    }
    if (j.contains("check")) {
        const json& cj = j["check"];
        if (!cj.contains("eta_file")) throw ConfigError("config: check.eta_file required");
        cfg.eta_file = cj["eta_file"].get<std::string>();
        if (cj.contains("c")) cfg.c_state = parse_vec2(cj["c"], "check.c");
    }
    if (j.contains("extract")) {
        const json& ej = j["extract"];
        if (!ej.contains("field_file")) throw ConfigError("config: extract.field_file required");
        cfg.field_file = ej["field_file"].get<std::string>();
    }
    if (j.contains("lift")) {
        const json& lj = j["lift"];
        if (!lj.contains("psi_file")) throw ConfigError("config: lift.psi_file required");
        cfg.psi_file = lj["psi_file"].get<std::string>();
        if (lj.contains("direction")) cfg.lift_direction = parse_vec2(lj["direction"], "direction");
        cfg.lift_k0 = lj.value("k0", 0.0);
        cfg.lift_beta = lj.value("beta", 0.0);
    }
    return cfg;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {
std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    return out;
}
}  // namespace

void write_field_csv(const std::string& path, const Field3D& field, const Discretization& disc) {
    auto out = open_out(path);
    out << "x,y,z,u1,u2,u3\n";
    const int P = disc.padded().points();
    const int M = disc.cheb().size();
    const int dim = 2 * field.truncation() + 1;
    Eigen::MatrixXcd coeff(dim, dim);
    std::array<Eigen::MatrixXcd, 3> vals;
    for (int zi = 0; zi < M; ++zi) {
        for (int j = 0; j < 3; ++j) {
            for (int i1 = 0; i1 < dim; ++i1)
                for (int i2 = 0; i2 < dim; ++i2)
                    coeff(i1, i2) = field.component(j)(zi, i1 * dim + i2);
            vals[j] = disc.padded().synthesize(coeff);
        }
        for (int p1 = 0; p1 < P; ++p1)
            for (int p2 = 0; p2 < P; ++p2) {
                const Eigen::Vector2d xp = disc.grid_point(p1, p2);
                out << format_number(xp.x()) << ',' << format_number(xp.y()) << ','
                    << format_number(disc.cheb().nodes()[zi]);
                for (int j = 0; j < 3; ++j) out << ',' << format_number(vals[j](p1, p2).real());
                out << '\n';
            }
    }
}

void write_field_coefficients_csv(const std::string& path, const Field3D& field) {
    auto out = open_out(path);
    out << "n1,n2,z_index,component,re,im\n";
    const int N = field.truncation();
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2)
            for (int j = 0; j < 3; ++j) {
                const auto prof = field.profile(j, n1, n2);
                for (int zi = 0; zi < prof.size(); ++zi) {
                    const std::complex<double> v = prof[zi];
                    if (v == std::complex<double>(0.0)) continue;
                    out << n1 << ',' << n2 << ',' << zi << ',' << (j + 1) << ','
                        << format_number(v.real()) << ',' << format_number(v.imag()) << '\n';
                }
            }
}

Field3D read_field_coefficients_csv(const std::string& path, int truncation, int z_nodes) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open field file '" + path + "'");
    Field3D field(truncation, z_nodes);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        int n1, n2, zi, comp;
        double re, im;
        char comma;
        if (!(ss >> n1 >> comma >> n2 >> comma >> zi >> comma >> comp >> comma >> re >> comma >> im))
            throw ConfigError("field file: malformed row '" + line + "'");
        if (std::abs(n1) > truncation || std::abs(n2) > truncation || zi < 0 || zi >= z_nodes ||
            comp < 1 || comp > 3)
            throw ConfigError("field file: index out of range in row '" + line + "'");
        field.profile(comp - 1, n1, n2)[zi] = {re, im};
    }
    return field;
}

void write_surface_csv(const std::string& path, const SurfaceProfile& eta) {
    auto out = open_out(path);
    out << "n1,n2,value\n";
    const int N = eta.truncation();
    for (int n1 = -N; n1 <= N; ++n1)
        for (int n2 = -N; n2 <= N; ++n2) {
            const double v = eta.get(n1, n2);
            if (v == 0.0) continue;
            out << n1 << ',' << n2 << ',' << format_number(v) << '\n';
        }
}

SurfaceProfile read_surface_csv(const std::string& path, int truncation) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open surface file '" + path + "'");
    SurfaceProfile eta(truncation);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        int n1, n2;
        double v;
        char comma;
        if (!(ss >> n1 >> comma >> n2 >> comma >> v))
            throw ConfigError("surface file: malformed row '" + line + "'");
        if (std::abs(n1) > truncation || std::abs(n2) > truncation)
            throw ConfigError("surface file: mode out of range in row '" + line + "'");
        // symmetric write keeps the even real class
        eta.set(n1, n2, v);
    }
    return eta;
}

void write_stream_function_csv(const std::string& path, const Eigen::MatrixXcd& psi) {
    auto out = open_out(path);
    out << "m,z_index,re,im\n";
    const int N = (static_cast<int>(psi.cols()) - 1) / 2;
    for (int m = -N; m <= N; ++m)
        for (int zi = 0; zi < psi.rows(); ++zi) {
            const std::complex<double> v = psi(zi, m + N);
            if (v == std::complex<double>(0.0)) continue;
            out << m << ',' << zi << ',' << format_number(v.real()) << ','
                << format_number(v.imag()) << '\n';
        }
}

Eigen::MatrixXcd read_stream_function_csv(const std::string& path, int truncation, int z_nodes) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open stream function file '" + path + "'");
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(z_nodes, 2 * truncation + 1);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        int m, zi;
        double re, im;
        char comma;
        if (!(ss >> m >> comma >> zi >> comma >> re >> comma >> im))
            throw ConfigError("stream function file: malformed row '" + line + "'");
        if (std::abs(m) > truncation || zi < 0 || zi >= z_nodes)
            throw ConfigError("stream function file: index out of range in row '" + line + "'");
        psi(zi, m + truncation) = {re, im};
    }
    return psi;
}

}  // namespace beltwave
