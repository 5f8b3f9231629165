#include "rydjc/coherent_dynamics.hpp"

#include "rydjc/eigensystem.hpp"
#include "rydjc/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rydjc {

namespace {

double log_poisson(double n_bar, unsigned m)
{
    const double md = static_cast<double>(m);
    return -n_bar + md * std::log(n_bar) - std::lgamma(md + 1.0);
}

}  // namespace

CoherentConfig CoherentConfig::with_mean_photons(double n_bar, const ModelParams& p, Truncation trunc)
{
    if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) {
        throw std::invalid_argument("mean photon number must be finite and non-negative");
    }
    return {cplx{std::sqrt(n_bar), 0.0}, p, trunc};
}

void validate(const CoherentConfig& cfg)
{
    validate_params(cfg.params);
    if (!std::isfinite(cfg.alpha.real()) || !std::isfinite(cfg.alpha.imag())) {
        throw std::invalid_argument("coherent amplitude must be finite");
    }
    validate(cfg.truncation);
}

void validate(const Truncation& tr)
{
    if (tr.mode == Truncation::Mode::automatic && !(tr.tail_tol > 0.0 && tr.tail_tol <= 1e-6)) {
        throw std::invalid_argument("tail tolerance must lie in (0, 1e-6], got " + std::to_string(tr.tail_tol));
    }
    if (tr.mode == Truncation::Mode::fixed && tr.fixed_cutoff > kMaxPhotonCutoff) {
        throw std::invalid_argument("fixed photon cutoff exceeds " + std::to_string(kMaxPhotonCutoff));
    }
}

double poisson_tail_bound(double n_bar, unsigned cutoff)
{
    if (n_bar == 0.0) {
        return 0.0;
    }
    const double next = static_cast<double>(cutoff) + 2.0;
    if (next <= n_bar) {
        return std::numeric_limits<double>::infinity();
    }
    // Terms beyond cutoff+1 shrink at least geometrically with ratio n/(M+2).
    return std::exp(log_poisson(n_bar, cutoff + 1)) / (1.0 - n_bar / next);
}

double coherence_tail_bound(double n_bar, unsigned cutoff)
{
    if (n_bar == 0.0) {
        return 0.0;
    }
    const double next = static_cast<double>(cutoff) + 1.0;
    if (next <= n_bar) {
        return std::numeric_limits<double>::infinity();
    }
    // sum_{j >= M} sqrt(w_j w_{j+1}); the ratio of consecutive terms is at most n/(M+1).
    const double lead = 0.5 * (log_poisson(n_bar, cutoff) + log_poisson(n_bar, cutoff + 1));
    return std::exp(lead) / (1.0 - n_bar / next);
}

double truncation_error_bound(double n_bar, unsigned cutoff)
{
    return 2.0 * poisson_tail_bound(n_bar, cutoff) + 2.0 * coherence_tail_bound(n_bar, cutoff);
}

PoissonWeights poisson_weights(double n_bar, const Truncation& trunc)
{
    if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) {
        throw std::invalid_argument("mean photon number must be finite and non-negative");
    }
    validate(trunc);
    unsigned cutoff = 0;
    if (trunc.mode == Truncation::Mode::fixed) {
        cutoff = trunc.fixed_cutoff;
    } else if (n_bar > 0.0) {
        while (!(truncation_error_bound(n_bar, cutoff) < trunc.tail_tol)) {
            if (++cutoff > kMaxPhotonCutoff) {
                throw std::runtime_error("tail tolerance " + std::to_string(trunc.tail_tol) +
                                         " unreachable below cutoff " + std::to_string(kMaxPhotonCutoff));
            }
        }
    }

    PoissonWeights out;
    out.cutoff = cutoff;
    out.weights.resize(cutoff + 1, 0.0);
    if (n_bar == 0.0) {
        out.weights[0] = 1.0;
        return out;
    }
    for (unsigned m = 0; m <= cutoff; ++m) {
        out.weights[m] = std::exp(log_poisson(n_bar, m));
    }
    return out;
}

std::pair<double, double> AtomDensityMatrix::eigenvalues() const noexcept
{
    const double mean = 0.5 * (p_sym + p_gg);
    const double radius = std::hypot(0.5 * (p_sym - p_gg), std::abs(gamma));
    return {mean - radius, mean + radius};
}

CoherentSeries::CoherentSeries(const CoherentConfig& cfg) : cfg_(cfg)
{
    validate(cfg_);
    const auto pw = poisson_weights(cfg_.n_bar(), cfg_.truncation);
    cutoff_ = pw.cutoff;
    vacuum_weight_ = pw.weights[0];

    // Subspace j pairs |g,g,j+1> with |sym,j>, so j runs to cutoff-1.
    const std::size_t count = cutoff_;
    rabi_.resize(count);
    weight_.resize(count);
    amplitude_.resize(count);
    cos2phi_.resize(count);
    sin2phi_.resize(count);
    gamma_weight_.resize(count);
    arg_.resize(count);
    sin_.resize(count);
    cos_.resize(count);
    for (unsigned j = 0; j < count; ++j) {
        const double phi = mixing_angle(j, cfg_.params);
        rabi_[j] = rabi_frequency(j, cfg_.params);
        weight_[j] = pw.weights[j + 1];
        sin2phi_[j] = std::sin(2.0 * phi);
        cos2phi_[j] = std::cos(2.0 * phi);
        amplitude_[j] = sin2phi_[j] * sin2phi_[j];
        gamma_weight_[j] = pw.weights[j] / std::sqrt(static_cast<double>(j) + 1.0);
    }
}

AtomDensityMatrix CoherentSeries::reduced_density(double t)
{
    AtomDensityMatrix rho;
    rho.p_sym = 0.0;
    rho.p_gg = vacuum_weight_;
    if (cutoff_ == 0) {
        return rho;
    }

    for (std::size_t j = 0; j < rabi_.size(); ++j) {
        arg_[j] = rabi_[j] * t;
    }
    const auto& k = kernels::active();
    k.sincos(arg_.data(), sin_.data(), cos_.data(), arg_.size());
    const kernels::SeriesTerms terms{weight_, amplitude_, cos2phi_, sin2phi_, gamma_weight_};
    const auto sums = k.series_sums(terms, sin_.data(), cos_.data());

    rho.p_sym = sums.sym;
    rho.p_gg += sums.gg;

    // gamma = -i alpha [ w_0 sin(2phi_0) sin(Omega_0 t) e^{-i(omega_0 + Delta/2)t}
    //                    + e^{-i omega_f t} (gamma_re - i gamma_im) ]
    const auto& p = cfg_.params;
    const cplx vacuum_term =
        vacuum_weight_ * sin2phi_[0] * sin_[0] * std::polar(1.0, -(p.omega_0 + 0.5 * p.delta()) * t);
    const cplx ladder = std::polar(1.0, -p.omega_f * t) * cplx{sums.gamma_re, -sums.gamma_im};
    rho.gamma = cplx{0.0, -1.0} * cfg_.alpha * (vacuum_term + ladder);
    return rho;
}

AtomDensityMatrix reduced_density(double t, const CoherentConfig& cfg)
{
    return CoherentSeries(cfg).reduced_density(t);
}

double prob_sym(double t, const CoherentConfig& cfg) { return reduced_density(t, cfg).p_sym; }
double prob_gg(double t, const CoherentConfig& cfg) { return reduced_density(t, cfg).p_gg; }
cplx gamma(double t, const CoherentConfig& cfg) { return reduced_density(t, cfg).gamma; }
double entanglement(double t, const CoherentConfig& cfg) { return entanglement(reduced_density(t, cfg)); }

std::vector<EntanglementPoint> time_series(const CoherentConfig& cfg, std::span<const double> t_grid)
{
    if (t_grid.empty()) {
        throw std::invalid_argument("time grid is empty");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw std::invalid_argument("time grid must be strictly increasing");
        }
    }
    CoherentSeries series(cfg);
    std::vector<EntanglementPoint> out;
    out.reserve(t_grid.size());
    for (const double t : t_grid) {
        const auto rho = series.reduced_density(t);
        out.push_back({t, rho.p_sym, rho.p_gg, rho.gamma, entanglement(rho)});
    }
    return out;
}

}  // namespace rydjc
