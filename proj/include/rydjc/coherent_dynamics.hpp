#pragma once

// Two atoms starting in |g,g> with the field in a coherent state |alpha>.
//
// The joint state is a Poisson-weighted superposition of the |g,g,n+1>
// evolutions of every subspace H_n, so the reduced atomic state lives on
// span{|sym>, |g,g>} and is fixed by three numbers: P(sym), P(g,g) and the
// coherence gamma = <sym|rho_atoms|g,g>. The infinite photon sums are cut at
// a certified Poisson tail.

#include "rydjc/model.hpp"

#include <span>
#include <utility>
#include <vector>

namespace rydjc {

struct Truncation {
    enum class Mode { automatic, fixed };

    Mode mode = Mode::automatic;
    unsigned fixed_cutoff = 0;  // M in fixed mode
    double tail_tol = 1e-12;    // automatic mode: bound on the truncation error of every observable

    static Truncation automatic(double tail_tol = 1e-12) { return {Mode::automatic, 0, tail_tol}; }
    static Truncation fixed(unsigned cutoff) { return {Mode::fixed, cutoff, 1e-12}; }
};

inline constexpr unsigned kMaxPhotonCutoff = 10000;

struct CoherentConfig {
    cplx alpha{0.0, 0.0};
    ModelParams params;
    Truncation truncation;

    [[nodiscard]] double n_bar() const noexcept { return std::norm(alpha); }

    static CoherentConfig with_mean_photons(double n_bar, const ModelParams& p, Truncation trunc = {});
};

// Throws std::invalid_argument on invalid params, n_bar, or tail tolerance
// outside (0, 1e-6].
void validate(const CoherentConfig& cfg);
void validate(const Truncation& trunc);

struct PoissonWeights {
    std::vector<double> weights;  // weights[m] = e^{-n} n^m / m!, m = 0..cutoff
    unsigned cutoff = 0;
};

// Weights are evaluated in log space. In automatic mode the cutoff is the
// smallest M (scanning upward) with truncation_error_bound(n, M) < tail_tol,
// which also puts the Poisson mass beyond M below tail_tol. Throws
// std::runtime_error if that needs M > kMaxPhotonCutoff.
PoissonWeights poisson_weights(double n_bar, const Truncation& trunc);

// Upper bound on sum_{m > cutoff} w_m; +inf if cutoff + 2 <= n_bar.
double poisson_tail_bound(double n_bar, unsigned cutoff);

// Upper bound on sum_{j >= cutoff} sqrt(w_j w_{j+1}), the largest possible
// magnitude of the coherence terms a cutoff drops; +inf if cutoff + 1 <= n_bar.
double coherence_tail_bound(double n_bar, unsigned cutoff);

// Bounds the change of p_sym, p_gg, |gamma| and epsilon caused by cutting the
// series at `cutoff`: 2 (mass tail + coherence tail). The purity moves by at
// most twice the dropped mass plus twice the coherence error.
double truncation_error_bound(double n_bar, unsigned cutoff);

// rho_atoms in the basis {|sym>, |g,g>}:
//   [ p_sym   gamma ]
//   [ gamma*  p_gg  ]
struct AtomDensityMatrix {
    double p_sym = 0.0;
    double p_gg = 1.0;
    cplx gamma{0.0, 0.0};

    [[nodiscard]] double trace() const noexcept { return p_sym + p_gg; }
    [[nodiscard]] double purity() const noexcept
    {
        return p_sym * p_sym + p_gg * p_gg + 2.0 * std::norm(gamma);
    }
    [[nodiscard]] double determinant() const noexcept { return p_sym * p_gg - std::norm(gamma); }
    // Ascending.
    [[nodiscard]] std::pair<double, double> eigenvalues() const noexcept;
};

struct EntanglementPoint {
    double t = 0.0;
    double p_sym = 0.0;
    double p_gg = 1.0;
    cplx gamma{0.0, 0.0};
    double epsilon = 0.0;
};

// 1 - tr(rho^2).
inline double entanglement(const AtomDensityMatrix& rho) noexcept { return 1.0 - rho.purity(); }

// Precomputed per-subspace tables for one configuration. Evaluation at a time
// point uses the active kernel variant and scratch buffers owned by the
// object, so one instance must not be shared between threads.
class CoherentSeries {
public:
    explicit CoherentSeries(const CoherentConfig& cfg);

    [[nodiscard]] AtomDensityMatrix reduced_density(double t);
    [[nodiscard]] unsigned cutoff() const noexcept { return cutoff_; }
    [[nodiscard]] const CoherentConfig& config() const noexcept { return cfg_; }

private:
    CoherentConfig cfg_;
    unsigned cutoff_ = 0;
    double vacuum_weight_ = 1.0;
    std::vector<double> rabi_;
    std::vector<double> weight_;
    std::vector<double> amplitude_;
    std::vector<double> cos2phi_;
    std::vector<double> sin2phi_;
    std::vector<double> gamma_weight_;
    std::vector<double> arg_;
    std::vector<double> sin_;
    std::vector<double> cos_;
};

double prob_sym(double t, const CoherentConfig& cfg);
double prob_gg(double t, const CoherentConfig& cfg);
cplx gamma(double t, const CoherentConfig& cfg);
AtomDensityMatrix reduced_density(double t, const CoherentConfig& cfg);
double entanglement(double t, const CoherentConfig& cfg);

// Throws std::invalid_argument for an empty or non-increasing grid.
std::vector<EntanglementPoint> time_series(const CoherentConfig& cfg, std::span<const double> t_grid);

}  // namespace rydjc
