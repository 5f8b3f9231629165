#include "variants.hpp"

#include <cmath>

namespace rydjc::kernels::detail {

void sincos_scalar(const double* x, double* s, double* c, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = std::sin(x[i]);
        c[i] = std::cos(x[i]);
    }
}

SeriesSums series_sums_scalar(const SeriesTerms& terms, const double* s, const double* c)
{
    const std::size_t m = terms.weight.size();
    SeriesSums out;
    for (std::size_t j = 0; j < m; ++j) {
        const double s2 = s[j] * s[j];
        out.sym += terms.weight[j] * terms.amplitude[j] * s2;
        out.gg += terms.weight[j] * (c[j] * c[j] + terms.cos2phi[j] * terms.cos2phi[j] * s2);
    }
    for (std::size_t j = 1; j < m; ++j) {
        const double f = terms.gamma_weight[j] * terms.sin2phi[j] * s[j];
        out.gamma_re += f * c[j - 1];
        out.gamma_im += f * terms.cos2phi[j - 1] * s[j - 1];
    }
    return out;
}

}  // namespace rydjc::kernels::detail
