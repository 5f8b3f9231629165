#pragma once

// Closed-form spectrum of the 3x3 block H^(n).
//
// The block has one field-decoupled eigenvector |asym,n> and a dressed pair
// |+,n>, |-,n> obtained from {|sym,n>, |g,g,n+1>} by a rotation through the
// mixing angle phi_n. The rotation matrix R has columns (v_asym, v_plus,
// v_minus); coefficients in the eigenbasis are c = R^T (mu, nu, xi).

#include "rydjc/model.hpp"

#include <array>

namespace rydjc {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;  // row-major: m[row][col]

// Omega_n(Delta) = sqrt((Delta/2)^2 + 2 lambda^2 (n+1)). Both functions throw
// std::invalid_argument for parameters rejected by validate_params.
double rabi_frequency(unsigned n, const ModelParams& p);

// phi_n in [0, pi/2]; exactly pi/4 at zero detuning. Throws
// std::invalid_argument for lambda = 0 with Delta <= 0, where the angle
// degenerates to 0/0.
double mixing_angle(unsigned n, const ModelParams& p);

struct EigenSystem {
    unsigned n = 0;
    double e_asym = 0.0;
    double e_plus = 0.0;
    double e_minus = 0.0;
    Vec3 v_asym{};
    Vec3 v_plus{};
    Vec3 v_minus{};
    Mat3 rotation{};
    double omega_n = 0.0;
    double phi_n = 0.0;

    [[nodiscard]] Vec3 energies() const noexcept { return {e_asym, e_plus, e_minus}; }
};

EigenSystem eigen_system(unsigned n, const ModelParams& p);

// Amplitudes on (|asym,n>, |+,n>, |-,n>).
struct EigenCoefficients {
    cplx asym;
    cplx plus;
    cplx minus;
};

EigenCoefficients to_eigen_basis(const SubspaceState& s, const EigenSystem& e) noexcept;
SubspaceState from_eigen_basis(const EigenCoefficients& c, const EigenSystem& e) noexcept;

// sin^2(2 phi_n): peak population of |sym,n> when starting from |g,g,n+1>.
double sym_amplitude(unsigned n, const ModelParams& p);

}  // namespace rydjc
