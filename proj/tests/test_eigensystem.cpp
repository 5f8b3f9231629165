#include "catch_amalgamated.hpp"

#include "rydjc/eigensystem.hpp"
#include "rydjc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace rydjc;
using Catch::Approx;

namespace {

Eigen::Matrix3d rotation_matrix(const EigenSystem& e)
{
    Eigen::Matrix3d r;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
            r(i, k) = e.rotation[i][k];
        }
    }
    return r;
}

}  // namespace

// Reference values below come from tests/oracle/freeze_values.py (mpmath, 30 digits).

TEST_CASE("Rabi frequency")
{
    const auto p = ModelParams::with_detuning(0.5, 1.0, 1.0);
    CHECK(rabi_frequency(0, p) == Approx(1.436140661634507165).epsilon(1e-15));

    SECTION("resonance reduces to lambda sqrt(2(n+1))")
    {
        for (unsigned n : {0u, 1u, 7u, 100u}) {
            CHECK(rabi_frequency(n, ModelParams{1.0, 1.0, 0.3}) == 0.3 * std::sqrt(2.0 * (n + 1)));
        }
    }
    SECTION("no coupling leaves |Delta|/2")
    {
        CHECK(rabi_frequency(4, ModelParams::with_detuning(-0.8, 1.0, 0.0)) == Approx(0.4));
    }
}

TEST_CASE("mixing angle")
{
    SECTION("exactly pi/4 at resonance")
    {
        for (unsigned n : {0u, 3u, 50u}) {
            CHECK(mixing_angle(n, ModelParams{1.0, 1.0, 2.5}) == kPi / 4);
        }
    }
    SECTION("detuning pushes the angle away from pi/4")
    {
        const double above = mixing_angle(0, ModelParams::with_detuning(0.5, 1.0, 1.0));
        const double below = mixing_angle(0, ModelParams::with_detuning(-0.5, 1.0, 1.0));
        CHECK(above > kPi / 4);
        CHECK(below < kPi / 4);
        CHECK(above + below == Approx(kPi / 2).epsilon(1e-15));
    }
    SECTION("stays in [0, pi/2] under extreme detuning")
    {
        for (double d : {-1e8, -50.0, 50.0, 1e8}) {
            const double phi = mixing_angle(2, ModelParams::with_detuning(d, 1.0, 1e-3));
            CHECK(phi >= 0.0);
            CHECK(phi <= kPi / 2);
        }
        CHECK(std::sin(2.0 * mixing_angle(0, ModelParams::with_detuning(-1e8, 1.0, 1.0))) > 0.0);
    }
    SECTION("uncoupled")
    {
        CHECK(mixing_angle(0, ModelParams::with_detuning(0.5, 1.0, 0.0)) == kPi / 2);
        CHECK_THROWS_AS(mixing_angle(0, ModelParams::with_detuning(-0.5, 1.0, 0.0)), std::invalid_argument);
        CHECK_THROWS_AS(mixing_angle(0, ModelParams{1.0, 1.0, 0.0}), std::invalid_argument);
    }
    SECTION("invalid parameters")
    {
        CHECK_THROWS_AS(mixing_angle(0, ModelParams{1.0, 1.0, -1.0}), std::invalid_argument);
        CHECK_THROWS_AS(rabi_frequency(0, ModelParams{1.0, 0.0, 1.0}), std::invalid_argument);
    }
}

TEST_CASE("eigenvalues at n=0, Delta=0.5")
{
    const auto e = eigen_system(0, ModelParams::with_detuning(0.5, 1.0, 1.0));
    CHECK(e.e_minus == Approx(-1.186140661634507165).epsilon(1e-15));
    CHECK(e.e_asym == 0.0);
    CHECK(e.e_plus == Approx(1.686140661634507165).epsilon(1e-15));
    CHECK(e.n == 0);
}

TEST_CASE("resonant spectrum is symmetric about omega_f n")
{
    const ModelParams p{1.0, 1.0, 0.7};
    for (unsigned n : {0u, 4u, 19u}) {
        const auto e = eigen_system(n, p);
        CHECK(e.e_asym == Approx(n));
        CHECK(e.e_plus - e.e_asym == Approx(e.e_asym - e.e_minus).epsilon(1e-14));
        CHECK(e.e_plus - e.e_minus == Approx(2.0 * 0.7 * std::sqrt(2.0 * (n + 1))));
    }
}

TEST_CASE("detuning amplitude sin^2(2 phi)")
{
    CHECK(sym_amplitude(0, ModelParams::with_detuning(0.5, 1.0, 1.0)) ==
          Approx(0.96969696969696969697).epsilon(1e-14));
    CHECK(sym_amplitude(0, ModelParams::with_detuning(0.5, 1.0, 1.0)) == Approx(0.97).margin(0.005));

    SECTION("grows toward 1 with photon number")
    {
        const auto p = ModelParams::with_detuning(1.0, 1.0, 1.0);
        double last = 0.0;
        for (unsigned n = 0; n <= 40; ++n) {
            const double a = sym_amplitude(n, p);
            CHECK(a > last);
            CHECK(a < 1.0);
            last = a;
        }
    }
    SECTION("symmetric in Delta")
    {
        for (double d : {0.1, 0.9, 3.0}) {
            CHECK(sym_amplitude(2, ModelParams::with_detuning(d, 1.0, 1.0)) ==
                  Approx(sym_amplitude(2, ModelParams::with_detuning(-d, 1.0, 1.0))).epsilon(1e-14));
        }
    }
    CHECK(sym_amplitude(5, ModelParams{}) == 1.0);
}

TEST_CASE("eigenvectors diagonalize the dense block")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> delta(-3.0, 3.0);
    std::uniform_real_distribution<double> lambda(0.05, 3.0);
    std::uniform_int_distribution<unsigned> photons(0, 60);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = ModelParams::with_detuning(delta(rng), 1.0, lambda(rng));
        const unsigned n = photons(rng);
        const auto e = eigen_system(n, p);
        const Eigen::Matrix3d h = oracle::subspace_hamiltonian(n, p).matrix.real();
        const Eigen::Matrix3d r = rotation_matrix(e);
        const Eigen::Vector3d energies(e.e_asym, e.e_plus, e.e_minus);
        const double scale = std::max(1.0, energies.cwiseAbs().maxCoeff());

        CHECK((h * r - r * energies.asDiagonal()).cwiseAbs().maxCoeff() / scale < 1e-13);
        CHECK((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(r.determinant() == Approx(1.0).epsilon(1e-14));
        CHECK(e.e_minus <= e.e_plus);
    }
}

TEST_CASE("eigenbasis transform round-trips")
{
    const auto e = eigen_system(3, ModelParams::with_detuning(0.7, 1.0, 1.3));
    const SubspaceState s{{0.3, 0.1}, {-0.5, 0.2}, {0.4, -0.6}};
    const auto back = from_eigen_basis(to_eigen_basis(s, e), e);
    CHECK(std::abs(back.mu - s.mu) < 1e-15);
    CHECK(std::abs(back.nu - s.nu) < 1e-15);
    CHECK(std::abs(back.xi - s.xi) < 1e-15);

    const auto c = to_eigen_basis(SubspaceState::asym(), e);
    CHECK(std::abs(c.asym) == Approx(1.0));
    CHECK(std::abs(c.plus) < 1e-16);
    CHECK(std::abs(c.minus) < 1e-16);
}
