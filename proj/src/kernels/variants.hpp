#pragma once

#include "rydjc/kernels.hpp"

namespace rydjc::kernels::detail {

void sincos_scalar(const double* x, double* s, double* c, std::size_t n);
SeriesSums series_sums_scalar(const SeriesTerms& terms, const double* s, const double* c);

#if defined(RYDJC_HAVE_AVX2)
void sincos_avx2(const double* x, double* s, double* c, std::size_t n);
SeriesSums series_sums_avx2(const SeriesTerms& terms, const double* s, const double* c);
#endif

}  // namespace rydjc::kernels::detail
