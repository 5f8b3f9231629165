#pragma once

// Parameters, amplitudes and the per-subspace basis of the blockaded
// two-atom Jaynes-Cummings model.
//
// Units: hbar = 1, so energies and angular frequencies share one unit. The
// CLI works in units of omega_0 (omega_0 = 1) unless told otherwise.
//
// Subspace H_n is spanned by
//   |psi_1> = |r,g,n>,  |psi_2> = |g,r,n>,  |psi_3> = |g,g,n+1>
// and a SubspaceState stores the amplitudes (mu, nu, xi) in that order.

#include <complex>

namespace rydjc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

struct ModelParams {
    double omega_f = 1.0;  // field mode
    double omega_0 = 1.0;  // atomic |g> <-> |r> transition
    double lambda = 1.0;   // atom-field coupling

    // Detuning is always derived, never stored.
    [[nodiscard]] double delta() const noexcept { return omega_f - omega_0; }

    static ModelParams with_detuning(double delta, double omega_0, double lambda) noexcept {
        return {omega_0 + delta, omega_0, lambda};
    }
};

// Returns p unchanged, or throws std::invalid_argument if omega_0 <= 0,
// lambda < 0, or any value is non-finite.
ModelParams validate_params(const ModelParams& p);

struct SubspaceState {
    cplx mu;  // |r,g,n>
    cplx nu;  // |g,r,n>
    cplx xi;  // |g,g,n+1>

    [[nodiscard]] double norm_squared() const noexcept {
        return std::norm(mu) + std::norm(nu) + std::norm(xi);
    }

    static SubspaceState rg() noexcept { return {1.0, 0.0, 0.0}; }
    static SubspaceState gr() noexcept { return {0.0, 1.0, 0.0}; }
    static SubspaceState gg() noexcept { return {0.0, 0.0, 1.0}; }
    // (|r,g> - |g,r>)/sqrt(2) and (|r,g> + |g,r>)/sqrt(2)
    static SubspaceState asym() noexcept { return {kInvSqrt2, -kInvSqrt2, 0.0}; }
    static SubspaceState sym() noexcept { return {kInvSqrt2, kInvSqrt2, 0.0}; }
};

inline double norm_squared(const SubspaceState& s) noexcept { return s.norm_squared(); }

// Probability of |sym,n> and |asym,n> within a subspace state.
inline double sym_population(const SubspaceState& s) noexcept { return 0.5 * std::norm(s.mu + s.nu); }
inline double asym_population(const SubspaceState& s) noexcept { return 0.5 * std::norm(s.mu - s.nu); }

// Throws std::invalid_argument unless |norm - 1| <= tol.
void require_normalized(const SubspaceState& s, double tol = 1e-12);

}  // namespace rydjc
