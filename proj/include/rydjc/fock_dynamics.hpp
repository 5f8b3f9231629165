#pragma once

// Time evolution inside one subspace H_n for a field prepared in a number
// state. Every named initial condition has a closed-form coefficient
// function; `evolve` handles arbitrary initial states through the
// eigenbasis. The two routes are kept separate so they can be checked
// against each other.

#include "rydjc/eigensystem.hpp"
#include "rydjc/model.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rydjc {

enum class FockCase {
    A,       // |asym,n>
    B,       // |g,g,n+1>
    C,       // |r,g,n>
    Beta,    // |sym,n>
    Custom,  // caller-supplied normalized state
};

struct FockScenario {
    FockCase kind = FockCase::B;
    unsigned n = 0;
    ModelParams params;
    SubspaceState initial{};  // only read for FockCase::Custom

    // Initial state for named cases, `initial` otherwise.
    [[nodiscard]] SubspaceState initial_state() const noexcept;
};

struct FockProbabilities {
    double t = 0.0;
    double p1 = 0.0;  // |r,g,n>
    double p2 = 0.0;  // |g,r,n>
    double p3 = 0.0;  // |g,g,n+1>
    double p_sym = 0.0;
    double p_asym = 0.0;
};

// exp(-i H^(n) t) s0 via the closed-form eigenbasis.
SubspaceState evolve(const SubspaceState& s0, unsigned n, const ModelParams& p, double t);
SubspaceState evolve(const SubspaceState& s0, const EigenSystem& e, double t) noexcept;

SubspaceState case_a_coefficients(unsigned n, const ModelParams& p, double t);
SubspaceState case_b_coefficients(unsigned n, const ModelParams& p, double t);
SubspaceState case_c_coefficients(unsigned n, const ModelParams& p, double t);
SubspaceState case_beta_coefficients(unsigned n, const ModelParams& p, double t);

// Closed-form amplitudes for the named cases, `evolve` for Custom. Throws
// std::invalid_argument for a non-normalized custom state.
SubspaceState amplitudes(const FockScenario& scenario, double t);

// Same cases, always through `evolve`.
SubspaceState amplitudes_via_eigenbasis(const FockScenario& scenario, double t);

FockProbabilities probabilities(const SubspaceState& s, double t) noexcept;
FockProbabilities probabilities(const FockScenario& scenario, double t);

struct FockSample {
    FockProbabilities probs;
    SubspaceState amplitudes;
};

std::vector<FockSample> fock_series(const FockScenario& scenario, std::span<const double> t_grid);

// t* = pi / (4 lambda sqrt(2(n+1))), where |g,g,n+1> has evolved into an
// equal-weight superposition of |sym,n> and |g,g,n+1>. Resonance only:
// throws std::invalid_argument if Delta != 0 or lambda == 0.
double entangling_time(unsigned n, const ModelParams& p);

}  // namespace rydjc
