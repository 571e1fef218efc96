#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "beltwave/discretization.hpp"
#include "beltwave/errors.hpp"
#include "beltwave/field.hpp"
#include "beltwave/flattened.hpp"
#include "beltwave/geometry.hpp"
#include "beltwave/lattice.hpp"
#include "beltwave/params.hpp"

using namespace beltwave;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("core_model") {

TEST_CASE("laminar flow evaluation") {
    PhysicalParams p;
    p.alpha = 0.0;
    p.d = 1.0;
    CHECK(laminar_eval({1.0, 0.0}, p, -0.5) == Eigen::Vector3d(1.0, 0.0, 0.0));

    p.alpha = 1.7;
    const Eigen::Vector3d at_surface = laminar_eval({2.5, -1.25}, p, 0.0);
    CHECK(at_surface.x() == doctest::Approx(2.5));
    CHECK(at_surface.y() == doctest::Approx(-1.25));
    CHECK(at_surface.z() == 0.0);

    // U^(2) = (sin, cos, 0) reduces to e1 at alpha z = pi/2
    p.alpha = -kPi;
    const Eigen::Vector3d u2 = laminar_eval({0.0, 1.0}, p, -0.5);
    CHECK(u2.x() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(u2.y() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("Bernoulli constant") {
    CHECK(bernoulli_Q({0.0, 0.0}) == 0.0);
    CHECK(bernoulli_Q({3.0, 4.0}) == doctest::Approx(12.5));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 20; ++i) {
        const double c1 = u(rng), c2 = u(rng);
        CHECK(bernoulli_Q({c1, c2}) == bernoulli_Q({-c1, -c2}));
    }
}

TEST_CASE("dual lattice identity holds to 1e-12") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        const Eigen::Vector2d l1(u(rng), u(rng));
        const Eigen::Vector2d l2(u(rng), u(rng));
        if (std::abs(l1.x() * l2.y() - l1.y() * l2.x()) < 0.05) continue;
        const Lattice lat = Lattice::from_generators(l1, l2);
        CHECK(lat.duality_residual() < 1e-12);
        const Lattice dual = Lattice::from_dual(lat.k1(), lat.k2());
        CHECK(dual.duality_residual() < 1e-12);
        CHECK((dual.lambda1() - l1).norm() < 1e-10 * l1.norm());
    }
}

TEST_CASE("lattice enumeration") {
    const Lattice sq = Lattice::from_dual({1.0, 0.0}, {0.0, 1.0});
    CHECK(lattice_enumerate(sq, 0.5).size() == 1);  // only the origin
    CHECK(lattice_enumerate(sq, 1.0).size() == 5);  // origin and the four unit modes

    // the count approaches pi R^2 / |det(k1,k2)| = pi R^2
    const double R = 40.0;
    const auto modes = lattice_enumerate(sq, R);
    const double expected = kPi * R * R;
    CHECK(std::abs(double(modes.size()) / expected - 1.0) < 0.2);

    // every mode exactly once
    std::set<std::pair<int, int>> seen;
    for (const auto& m : lattice_enumerate(sq, 3.7)) {
        CHECK(seen.emplace(m.n1, m.n2).second);
        CHECK(m.k.norm() <= 3.7);
    }
}

TEST_CASE("flatten geometry") {
    const Lattice sq = Lattice::from_dual({1.0, 0.0}, {0.0, 1.0});
    const double d = 1.0;

    SurfaceProfile flat(2);
    const FlattenBasis id = flatten_geometry(flat, sq, d, {0.3, 0.4}, -0.5);
    CHECK(id.f1 == Eigen::Vector3d(1, 0, 0));
    CHECK(id.f2 == Eigen::Vector3d(0, 1, 0));
    CHECK(id.f3 == Eigen::Vector3d(0, 0, 1));
    CHECK(id.J == 1.0);

    SurfaceProfile lifted(2);
    lifted.set(0, 0, d);  // eta identically d
    const FlattenBasis stretch = flatten_geometry(lifted, sq, d, {0.1, 0.9}, -0.25);
    CHECK(stretch.J == doctest::Approx(2.0));
    CHECK(stretch.f3.z() == doctest::Approx(2.0));

    // bottom is unmoved: at zdot = -d the horizontal tangents are flat
    const double eps = 0.07;
    SurfaceProfile wave(2);
    wave.set(1, 0, eps / 2.0);  // eta = eps cos(k1 . x')
    const Eigen::Vector2d xq(kPi / 2.0, 0.0);  // k1 . x' = pi/2
    const FlattenBasis bottom = flatten_geometry(wave, sq, d, xq, -d);
    CHECK(bottom.f1.z() == doctest::Approx(0.0));
    CHECK(bottom.f1.x() == 1.0);

    SurfaceProfile sunk(2);
    sunk.set(0, 0, -2.0 * d);
    CHECK_THROWS_AS(flatten_geometry(sunk, sq, d, {0.0, 0.0}, -0.5), DegenerateDomainError);
}

TEST_CASE("eval_field synthesizes modes") {
    const Lattice sq = Lattice::from_dual({1.0, 0.0}, {0.0, 1.0});
    Discretization disc(sq, 3, 16, 1.0);
    PhysicalParams p;
    p.alpha = 0.9;

    Field3D zero(3, 16);
    CHECK(eval_field(zero, disc, {0.2, 0.7}, -0.3).norm() == 0.0);

    // odd vertical mode: coefficients -i A(z)/2 at +k, +i A(z)/2 at -k give A(z) sin(k.x')
    Field3D odd(3, 16);
    Eigen::VectorXcd prof(16);
    for (int j = 0; j < 16; ++j) {
        const double z = disc.cheb().nodes()[j];
        prof[j] = std::complex<double>(0.0, -0.5 * (z + 1.0));  // A(z) = z + d
    }
    odd.profile(2, 1, 0) = prof;
    odd.profile(2, -1, 0) = prof.conjugate();
    const Eigen::Vector2d xp(0.37, 0.81);
    const double z = -0.21;
    const Eigen::Vector3d val = eval_field(odd, disc, xp, z);
    CHECK(val.z() == doctest::Approx((z + 1.0) * std::sin(xp.x())).epsilon(1e-12));

    // laminar flow injected at k = 0 matches laminar_eval everywhere
    const LaminarFlow flow{1.3, -0.4};
    const Field3D lam = laminar_field(flow, p, disc);
    for (double zq : {-0.91, -0.5, -0.013}) {
        const Eigen::Vector3d got = eval_field(lam, disc, {0.1, 0.2}, zq);
        const Eigen::Vector3d want = laminar_eval(flow, p, zq);
        CHECK((got - want).norm() < 1e-12);
    }

    // conjugate pairing gives a real field
    std::mt19937 rng(3);
    std::normal_distribution<double> g(0.0, 1.0);
    Field3D rnd(3, 16);
    for (int n1 = -3; n1 <= 3; ++n1)
        for (int n2 = -3; n2 <= 3; ++n2) {
            if (n1 < 0 || (n1 == 0 && n2 < 0)) continue;
            for (int j = 0; j < 3; ++j) {
                Eigen::VectorXcd pr(16);
                for (int zi = 0; zi < 16; ++zi) pr[zi] = std::complex<double>(g(rng), g(rng));
                rnd.profile(j, n1, n2) = pr;
                if (n1 != 0 || n2 != 0) rnd.profile(j, -n1, -n2) = pr.conjugate();
                else rnd.profile(j, 0, 0) = pr.real().cast<std::complex<double>>();
            }
        }
    const Eigen::Vector3cd cval = eval_field_complex(rnd, disc, {1.7, 0.23}, -0.66);
    CHECK(cval.imag().cwiseAbs().maxCoeff() < 1e-13 * std::max(1.0, cval.real().norm()));
}

TEST_CASE("padded transform round trip") {
    const Lattice lat = Lattice::from_dual({1.0, 0.2}, {-0.1, 1.4});
    Discretization disc(lat, 5, 8, 1.0);
    std::mt19937 rng(5);
    std::normal_distribution<double> g(0.0, 1.0);
    SurfaceField f(5);
    for (int n1 = -5; n1 <= 5; ++n1)
        for (int n2 = -5; n2 <= 5; ++n2) f.at(n1, n2) = {g(rng), g(rng)};
    const SurfaceField back = disc.padded().analyze_field(disc.padded().synthesize(f));
    CHECK((back.coeffs() - f.coeffs()).cwiseAbs().maxCoeff() < 1e-12);

    // aliasing-free products: the analyzed product of two single modes lands
    // only on the sum/difference modes
    SurfaceField a(5), b(5);
    a.at(2, 1) = 1.0;
    a.at(-2, -1) = 1.0;
    b.at(1, 1) = 0.5;
    b.at(-1, -1) = 0.5;
    const Eigen::MatrixXcd prod =
        disc.padded().synthesize(a).cwiseProduct(disc.padded().synthesize(b));
    const SurfaceField c = disc.padded().analyze_field(prod);
    CHECK(std::abs(c.at(3, 2) - 0.5) < 1e-13);
    CHECK(std::abs(c.at(1, 0) - 0.5) < 1e-13);
    CHECK(std::abs(c.at(0, 0)) < 1e-13);
}

TEST_CASE("surface profile evenness storage") {
    SurfaceProfile eta(4);
    eta.set(2, -1, 0.25);
    CHECK(eta.get(-2, 1) == 0.25);
    const SurfaceField f = eta.to_field();
    CHECK(f.even_class_violation() == 0.0);
}

}  // TEST_SUITE
