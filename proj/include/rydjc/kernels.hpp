#pragma once

// Data-parallel inner loops of the coherent-state series.
//
// Each kernel has a scalar reference implementation and, where the build and
// the CPU allow it, an AVX2+FMA variant. The variant is chosen once at first
// use from CPUID; the RYDJC_ISA environment variable ("scalar" or "avx2")
// overrides the choice. Variants agree with the scalar reference to within a
// few ulps; they are not bit-identical (different summation order and
// polynomial sin/cos).

#include <cstddef>
#include <span>
#include <string_view>

namespace rydjc::kernels {

enum class Isa { scalar, avx2 };

std::string_view name(Isa isa) noexcept;

// Per-subspace coefficients of the truncated Poisson series, indexed by the
// subspace j = 0..M-1. All spans have the same length.
struct SeriesTerms {
    std::span<const double> weight;        // Poisson weight of |g,g,j+1>
    std::span<const double> amplitude;     // sin^2(2 phi_j)
    std::span<const double> cos2phi;       // cos(2 phi_j)
    std::span<const double> sin2phi;       // sin(2 phi_j)
    std::span<const double> gamma_weight;  // Poisson weight of |g,g,j> / sqrt(j+1); entry 0 unused
};

// With s_j = sin(Omega_j t), c_j = cos(Omega_j t):
//   sym      = sum_j      weight_j amplitude_j s_j^2
//   gg       = sum_j      weight_j (c_j^2 + cos2phi_j^2 s_j^2)
//   gamma_re = sum_{j>=1} gamma_weight_j sin2phi_j s_j c_{j-1}
//   gamma_im = sum_{j>=1} gamma_weight_j sin2phi_j cos2phi_{j-1} s_j s_{j-1}
struct SeriesSums {
    double sym = 0.0;
    double gg = 0.0;
    double gamma_re = 0.0;
    double gamma_im = 0.0;
};

struct KernelTable {
    Isa isa;
    // s[i] = sin(x[i]), c[i] = cos(x[i]) for i < n.
    void (*sincos)(const double* x, double* s, double* c, std::size_t n);
    // s and c hold terms.weight.size() entries.
    SeriesSums (*series_sums)(const SeriesTerms& terms, const double* s, const double* c);
};

// True if the variant was compiled in and the running CPU supports it.
bool supported(Isa isa) noexcept;

// Throws std::invalid_argument if the variant is not supported.
const KernelTable& table(Isa isa);

const KernelTable& active() noexcept;
void set_active(Isa isa);

// Span wrappers over active(). Sizes must match.
void sincos(std::span<const double> x, std::span<double> s, std::span<double> c);
SeriesSums series_sums(const SeriesTerms& terms, std::span<const double> s, std::span<const double> c);

}  // namespace rydjc::kernels
