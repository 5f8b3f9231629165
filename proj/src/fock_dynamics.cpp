#include "rydjc/fock_dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace rydjc {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx phase(double angle) { return std::polar(1.0, angle); }

// Shared pieces of the dressed-pair evolution: the carrier
// exp[-i(omega_f n + Delta/2) t] and the angle.
struct Dressed {
    double omega;
    double phi;
    cplx carrier;
};

Dressed dressed(unsigned n, const ModelParams& p, double t)
{
    const double omega = rabi_frequency(n, p);
    const double phi = mixing_angle(n, p);
    const double base = p.omega_f * static_cast<double>(n) + 0.5 * p.delta();
    return {omega, phi, phase(-base * t)};
}

// mu_B = nu_B = (-i/sqrt2) sin(2 phi) carrier sin(Omega t); also xi_C.
cplx case_b_mu(const Dressed& d, double t)
{
    return -kI * kInvSqrt2 * std::sin(2.0 * d.phi) * d.carrier * std::sin(d.omega * t);
}

}  // namespace

SubspaceState FockScenario::initial_state() const noexcept
{
    switch (kind) {
    case FockCase::A: return SubspaceState::asym();
    case FockCase::B: return SubspaceState::gg();
    case FockCase::C: return SubspaceState::rg();
    case FockCase::Beta: return SubspaceState::sym();
    case FockCase::Custom: break;
    }
    return initial;
}

SubspaceState evolve(const SubspaceState& s0, const EigenSystem& e, double t) noexcept
{
    auto c = to_eigen_basis(s0, e);
    c.asym *= phase(-e.e_asym * t);
    c.plus *= phase(-e.e_plus * t);
    c.minus *= phase(-e.e_minus * t);
    return from_eigen_basis(c, e);
}

SubspaceState evolve(const SubspaceState& s0, unsigned n, const ModelParams& p, double t)
{
    return evolve(s0, eigen_system(n, p), t);
}

SubspaceState case_a_coefficients(unsigned n, const ModelParams& p, double t)
{
    const cplx f = kInvSqrt2 * phase(-p.omega_f * static_cast<double>(n) * t);
    return {f, -f, 0.0};
}

SubspaceState case_b_coefficients(unsigned n, const ModelParams& p, double t)
{
    const auto d = dressed(n, p, t);
    const cplx mu = case_b_mu(d, t);
    const double c2 = std::cos(d.phi) * std::cos(d.phi);
    const double s2 = std::sin(d.phi) * std::sin(d.phi);
    const cplx xi = d.carrier * (c2 * phase(d.omega * t) + s2 * phase(-d.omega * t));
    return {mu, mu, xi};
}

SubspaceState case_beta_coefficients(unsigned n, const ModelParams& p, double t)
{
    const auto d = dressed(n, p, t);
    const double c2 = std::cos(d.phi) * std::cos(d.phi);
    const double s2 = std::sin(d.phi) * std::sin(d.phi);
    const cplx mu = kInvSqrt2 * d.carrier * (c2 * phase(-d.omega * t) + s2 * phase(d.omega * t));
    const cplx xi = -kI * std::sin(2.0 * d.phi) * d.carrier * std::sin(d.omega * t);
    return {mu, mu, xi};
}

SubspaceState case_c_coefficients(unsigned n, const ModelParams& p, double t)
{
    // |r,g,n> = (|sym,n> + |asym,n>)/sqrt2: half the beta evolution plus the
    // stationary asym part.
    const auto d = dressed(n, p, t);
    const double c2 = std::cos(d.phi) * std::cos(d.phi);
    const double s2 = std::sin(d.phi) * std::sin(d.phi);
    const cplx bare = phase(-p.omega_f * static_cast<double>(n) * t);
    const cplx dressed_part = d.carrier * (s2 * phase(d.omega * t) + c2 * phase(-d.omega * t));
    return {0.5 * (bare + dressed_part), 0.5 * (-bare + dressed_part), case_b_mu(d, t)};
}

SubspaceState amplitudes(const FockScenario& scenario, double t)
{
    const auto& p = scenario.params;
    switch (scenario.kind) {
    case FockCase::A: return case_a_coefficients(scenario.n, p, t);
    case FockCase::B: return case_b_coefficients(scenario.n, p, t);
    case FockCase::C: return case_c_coefficients(scenario.n, p, t);
    case FockCase::Beta: return case_beta_coefficients(scenario.n, p, t);
    case FockCase::Custom: break;
    }
    require_normalized(scenario.initial);
    return evolve(scenario.initial, scenario.n, p, t);
}

SubspaceState amplitudes_via_eigenbasis(const FockScenario& scenario, double t)
{
    const auto s0 = scenario.initial_state();
    if (scenario.kind == FockCase::Custom) {
        require_normalized(s0);
    }
    return evolve(s0, scenario.n, scenario.params, t);
}

FockProbabilities probabilities(const SubspaceState& s, double t) noexcept
{
    return {t, std::norm(s.mu), std::norm(s.nu), std::norm(s.xi), sym_population(s), asym_population(s)};
}

FockProbabilities probabilities(const FockScenario& scenario, double t)
{
    return probabilities(amplitudes(scenario, t), t);
}

std::vector<FockSample> fock_series(const FockScenario& scenario, std::span<const double> t_grid)
{
    if (scenario.kind == FockCase::Custom) {
        require_normalized(scenario.initial);
    }
    std::vector<FockSample> out;
    out.reserve(t_grid.size());
    for (const double t : t_grid) {
        const auto s = amplitudes(scenario, t);
        out.push_back({probabilities(s, t), s});
    }
    return out;
}

double entangling_time(unsigned n, const ModelParams& p)
{
    if (p.delta() != 0.0) {
        throw std::invalid_argument("entangling time is defined at zero detuning only");
    }
    if (p.lambda <= 0.0) {
        throw std::invalid_argument("entangling time requires lambda > 0");
    }
    return kPi / (4.0 * p.lambda * std::sqrt(2.0 * (static_cast<double>(n) + 1.0)));
}

}  // namespace rydjc
