// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after a CPUID check.

#include "variants.hpp"

#include <immintrin.h>

#include <cmath>

namespace rydjc::kernels::detail {

namespace {

// pi/2 split into three parts (each a doubled Cephes pi/4 constant); the
// first two have short mantissas so k * part is exact for |k| < 2^29.
constexpr double kPio2Hi = 1.57079625129699707031e+00;
constexpr double kPio2Mid = 7.54978941586159635335e-08;
constexpr double kPio2Lo = 5.39030285815811905290e-15;
constexpr double kTwoOverPi = 0.63661977236758134308;

// Beyond this the three-part reduction loses digits; those lanes go scalar.
constexpr double kMaxReduced = 1.0e6;

// Minimax coefficients on [-pi/4, pi/4] (Cephes sin.c).
constexpr double kSin[] = {
    1.58962301576546568060e-10, -2.50507477628578072866e-08, 2.75573136213857245213e-06,
    -1.98412698295895385996e-04, 8.33333333332211858878e-03, -1.66666666666666307295e-01,
};
constexpr double kCos[] = {
    -1.13585365213876817300e-11, 2.08757008419747316778e-09, -2.75573141792967388112e-07,
    2.48015872888517045348e-05, -1.38888888888730564116e-03, 4.16666666666665929218e-02,
};

inline __m256d horner(__m256d z, const double (&coef)[6])
{
    __m256d acc = _mm256_set1_pd(coef[0]);
    for (int i = 1; i < 6; ++i) {
        acc = _mm256_fmadd_pd(acc, z, _mm256_set1_pd(coef[i]));
    }
    return acc;
}

inline __m256d lane_mask(__m128i quadrant, int bit)
{
    const __m128i b = _mm_set1_epi32(bit);
    const __m128i hit = _mm_cmpeq_epi32(_mm_and_si128(quadrant, b), b);
    return _mm256_castsi256_pd(_mm256_cvtepi32_epi64(hit));
}

inline void sincos4(__m256d x, __m256d& s, __m256d& c)
{
    const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Hi), x);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Mid), r);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Lo), r);

    const __m256d z = _mm256_mul_pd(r, r);
    const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(r, z), horner(z, kSin), r);
    const __m256d half_z = _mm256_mul_pd(_mm256_set1_pd(0.5), z);
    const __m256d cos_r =
        _mm256_fmadd_pd(_mm256_mul_pd(z, z), horner(z, kCos), _mm256_sub_pd(_mm256_set1_pd(1.0), half_z));

    // Quadrant q = k mod 4: sin x = {s, c, -s, -c}[q], cos x = {c, -s, -c, s}[q].
    const __m128i q = _mm256_cvtpd_epi32(k);
    const __m256d swap = lane_mask(q, 1);
    const __m256d neg_sin = lane_mask(q, 2);
    const __m256d neg_cos = lane_mask(_mm_add_epi32(q, _mm_set1_epi32(1)), 2);
    const __m256d sign = _mm256_set1_pd(-0.0);

    s = _mm256_blendv_pd(sin_r, cos_r, swap);
    c = _mm256_blendv_pd(cos_r, sin_r, swap);
    s = _mm256_xor_pd(s, _mm256_and_pd(neg_sin, sign));
    c = _mm256_xor_pd(c, _mm256_and_pd(neg_cos, sign));
}

inline double hsum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

void sincos_avx2(const double* x, double* s, double* c, std::size_t n)
{
    const __m256d limit = _mm256_set1_pd(kMaxReduced);
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d out_of_range = _mm256_cmp_pd(_mm256_and_pd(v, abs_mask), limit, _CMP_NLE_UQ);
        if (_mm256_movemask_pd(out_of_range) != 0) {
            sincos_scalar(x + i, s + i, c + i, 4);
            continue;
        }
        __m256d vs;
        __m256d vc;
        sincos4(v, vs, vc);
        _mm256_storeu_pd(s + i, vs);
        _mm256_storeu_pd(c + i, vc);
    }
    if (i < n) {
        double xin[4] = {0.0, 0.0, 0.0, 0.0};
        double sout[4];
        double cout[4];
        const std::size_t rest = n - i;
        for (std::size_t k = 0; k < rest; ++k) {
            xin[k] = x[i + k];
        }
        sincos_avx2(xin, sout, cout, 4);
        for (std::size_t k = 0; k < rest; ++k) {
            s[i + k] = sout[k];
            c[i + k] = cout[k];
        }
    }
}

SeriesSums series_sums_avx2(const SeriesTerms& terms, const double* s, const double* c)
{
    const std::size_t m = terms.weight.size();
    const double* w = terms.weight.data();
    const double* amp = terms.amplitude.data();
    const double* cos2 = terms.cos2phi.data();
    const double* sin2 = terms.sin2phi.data();
    const double* gw = terms.gamma_weight.data();

    __m256d sym = _mm256_setzero_pd();
    __m256d gg = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d vs = _mm256_loadu_pd(s + j);
        const __m256d vc = _mm256_loadu_pd(c + j);
        const __m256d vw = _mm256_loadu_pd(w + j);
        const __m256d vb = _mm256_loadu_pd(cos2 + j);
        const __m256d s2 = _mm256_mul_pd(vs, vs);
        sym = _mm256_fmadd_pd(_mm256_mul_pd(vw, _mm256_loadu_pd(amp + j)), s2, sym);
        const __m256d inner = _mm256_fmadd_pd(_mm256_mul_pd(vb, vb), s2, _mm256_mul_pd(vc, vc));
        gg = _mm256_fmadd_pd(vw, inner, gg);
    }
    SeriesSums out;
    out.sym = hsum(sym);
    out.gg = hsum(gg);
    for (; j < m; ++j) {
        const double s2 = s[j] * s[j];
        out.sym += w[j] * amp[j] * s2;
        out.gg += w[j] * (c[j] * c[j] + cos2[j] * cos2[j] * s2);
    }

    __m256d gre = _mm256_setzero_pd();
    __m256d gim = _mm256_setzero_pd();
    j = 1;
    for (; j + 4 <= m; j += 4) {
        const __m256d f = _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(gw + j), _mm256_loadu_pd(sin2 + j)),
                                        _mm256_loadu_pd(s + j));
        gre = _mm256_fmadd_pd(f, _mm256_loadu_pd(c + j - 1), gre);
        const __m256d prev = _mm256_mul_pd(_mm256_loadu_pd(cos2 + j - 1), _mm256_loadu_pd(s + j - 1));
        gim = _mm256_fmadd_pd(f, prev, gim);
    }
    out.gamma_re = hsum(gre);
    out.gamma_im = hsum(gim);
    for (; j < m; ++j) {
        const double f = gw[j] * sin2[j] * s[j];
        out.gamma_re += f * c[j - 1];
        out.gamma_im += f * cos2[j - 1] * s[j - 1];
    }
    return out;
}

}  // namespace rydjc::kernels::detail
