#include "variants.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rydjc::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, &detail::sincos_scalar, &detail::series_sums_scalar};
#if defined(RYDJC_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, &detail::sincos_avx2, &detail::series_sums_avx2};
#endif

bool cpu_has_avx2() noexcept
{
#if defined(RYDJC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* initial_table() noexcept
{
    const char* env = std::getenv("RYDJC_ISA");
    const std::string want = env != nullptr ? env : "";
    if (want == "scalar") {
        return &kScalar;
    }
#if defined(RYDJC_HAVE_AVX2)
    if (cpu_has_avx2()) {
        return &kAvx2;
    }
#endif
    return &kScalar;
}

std::atomic<const KernelTable*>& active_slot() noexcept
{
    static std::atomic<const KernelTable*> slot{initial_table()};
    return slot;
}

}  // namespace

std::string_view name(Isa isa) noexcept
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool supported(Isa isa) noexcept
{
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
    }
    return false;
}

const KernelTable& table(Isa isa)
{
    if (!supported(isa)) {
        throw std::invalid_argument("kernel variant '" + std::string(name(isa)) + "' is not available");
    }
#if defined(RYDJC_HAVE_AVX2)
    if (isa == Isa::avx2) {
        return kAvx2;
    }
#endif
    return kScalar;
}

const KernelTable& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

void set_active(Isa isa) { active_slot().store(&table(isa), std::memory_order_release); }

void sincos(std::span<const double> x, std::span<double> s, std::span<double> c)
{
    if (s.size() != x.size() || c.size() != x.size()) {
        throw std::invalid_argument("sincos: output spans must match the input length");
    }
    active().sincos(x.data(), s.data(), c.data(), x.size());
}

SeriesSums series_sums(const SeriesTerms& terms, std::span<const double> s, std::span<const double> c)
{
    const std::size_t m = terms.weight.size();
    if (terms.amplitude.size() != m || terms.cos2phi.size() != m || terms.sin2phi.size() != m ||
        terms.gamma_weight.size() != m || s.size() != m || c.size() != m) {
        throw std::invalid_argument("series_sums: all spans must have the same length");
    }
    return active().series_sums(terms, s.data(), c.data());
}

}  // namespace rydjc::kernels
