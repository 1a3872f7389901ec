#include "gextreme/mc_sim.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gextreme {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

McEstimate finish_estimate(const NormalizationParams& p, double x,
                           std::int64_t samples, std::int64_t hits,
                           std::uint64_t seed) {
    McEstimate e{p.n, x, samples, hits, LogProb{}, LogProb{}, LogProb{}, seed};
    const double s = static_cast<double>(samples);
    const double p_hat = static_cast<double>(hits) / s;
    e.log_p_hat.value = hits == 0
        ? -std::numeric_limits<double>::infinity()
        : std::log(static_cast<double>(hits)) - std::log(s);

    // 95% Wilson score interval, then into log space.
    const double z = 1.959963984540054;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / s;
    const double centre = (p_hat + z2 / (2.0 * s)) / denom;
    const double half =
        z * std::sqrt(p_hat * (1.0 - p_hat) / s + z2 / (4.0 * s * s)) / denom;
    const double lo = std::max(0.0, centre - half);
    const double hi = std::min(1.0, centre + half);
    e.ci_lo.value = lo == 0.0 ? -std::numeric_limits<double>::infinity()
                              : std::log(lo);
    e.ci_hi.value = std::log(hi);
    return e;
}

} // namespace

double uniform_open01(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t r = mix64(seed + (index + 1) * kGoldenGamma);
    return (static_cast<double>(r >> 11) + 0.5) * 0x1.0p-53;
}

double sample_max(std::int64_t n, double u) {
    if (n < 1) throw std::domain_error("sample_max: n must be >= 1");
    if (!(u > 0.0) || !(u < 1.0))
        throw std::domain_error("sample_max: u must be in (0,1)");
    return inv_cdf_log(LogProb{std::log(u) / static_cast<double>(n)});
}

double sample_max(const NormalizationParams& p, double u) {
    return sample_max(p.n, u);
}

McEstimate estimate_tail(const NormalizationParams& p, double x,
                         std::int64_t samples, std::uint64_t seed,
                         int threads) {
    if (samples < 1)
        throw std::domain_error("estimate_tail: samples must be >= 1");
    std::int64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : hits) \
    num_threads(threads > 0 ? threads : omp_get_max_threads())
#else
    (void)threads;
#endif
    for (std::int64_t i = 0; i < samples; ++i) {
        const double u = uniform_open01(seed, static_cast<std::uint64_t>(i));
        const double z = z_of_max(p, sample_max(p.n, u));
        if (z > x) ++hits;
    }
    return finish_estimate(p, x, samples, hits, seed);
}

McEstimate estimate_tail_serial(const NormalizationParams& p, double x,
                                std::int64_t samples, std::uint64_t seed) {
    if (samples < 1)
        throw std::domain_error("estimate_tail: samples must be >= 1");
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double u = uniform_open01(seed, static_cast<std::uint64_t>(i));
        const double z = z_of_max(p, sample_max(p.n, u));
        if (z > x) ++hits;
    }
    return finish_estimate(p, x, samples, hits, seed);
}

} // namespace gextreme
