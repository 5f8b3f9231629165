#include "rydjc/eigensystem.hpp"

#include <cmath>
#include <stdexcept>

namespace rydjc {

namespace {

// lambda * sqrt(2(n+1)): the zero-detuning Rabi frequency.
double resonant_rabi(unsigned n, const ModelParams& p)
{
    return p.lambda * std::sqrt(2.0 * (static_cast<double>(n) + 1.0));
}

}  // namespace

double rabi_frequency(unsigned n, const ModelParams& p)
{
    validate_params(p);
    // hypot keeps Omega_n(0) bit-identical to lambda*sqrt(2(n+1)).
    return std::hypot(0.5 * p.delta(), resonant_rabi(n, p));
}

double mixing_angle(unsigned n, const ModelParams& p)
{
    validate_params(p);
    const double half_delta = 0.5 * p.delta();
    const double g = resonant_rabi(n, p);
    if (g == 0.0 && half_delta <= 0.0) {
        throw std::invalid_argument("mixing angle undefined for lambda = 0 and delta <= 0");
    }
    const double omega = std::hypot(half_delta, g);
    // Omega + Delta/2 cancels for Delta << 0; use (Omega^2 - Delta^2/4) / (Omega - Delta/2).
    const double numerator = half_delta >= 0.0 ? omega + half_delta : g * g / (omega - half_delta);
    return std::atan2(numerator, g);
}

double sym_amplitude(unsigned n, const ModelParams& p)
{
    const double s = std::sin(2.0 * mixing_angle(n, p));
    return s * s;
}

EigenSystem eigen_system(unsigned n, const ModelParams& p)
{
    EigenSystem e;
    e.n = n;
    e.omega_n = rabi_frequency(n, p);
    e.phi_n = mixing_angle(n, p);

    const double base = p.omega_f * static_cast<double>(n);
    e.e_asym = base;
    e.e_plus = base + 0.5 * p.delta() + e.omega_n;
    e.e_minus = base + 0.5 * p.delta() - e.omega_n;

    const double c = std::cos(e.phi_n);
    const double s = std::sin(e.phi_n);
    e.v_asym = {kInvSqrt2, -kInvSqrt2, 0.0};
    e.v_plus = {c * kInvSqrt2, c * kInvSqrt2, s};
    e.v_minus = {-s * kInvSqrt2, -s * kInvSqrt2, c};

    for (int i = 0; i < 3; ++i) {
        e.rotation[i] = {e.v_asym[i], e.v_plus[i], e.v_minus[i]};
    }
    return e;
}

EigenCoefficients to_eigen_basis(const SubspaceState& s, const EigenSystem& e) noexcept
{
    const auto& r = e.rotation;
    return {
        r[0][0] * s.mu + r[1][0] * s.nu + r[2][0] * s.xi,
        r[0][1] * s.mu + r[1][1] * s.nu + r[2][1] * s.xi,
        r[0][2] * s.mu + r[1][2] * s.nu + r[2][2] * s.xi,
    };
}

SubspaceState from_eigen_basis(const EigenCoefficients& c, const EigenSystem& e) noexcept
{
    const auto& r = e.rotation;
    return {
        r[0][0] * c.asym + r[0][1] * c.plus + r[0][2] * c.minus,
        r[1][0] * c.asym + r[1][1] * c.plus + r[1][2] * c.minus,
        r[2][0] * c.asym + r[2][1] * c.plus + r[2][2] * c.minus,
    };
}

}  // namespace rydjc
