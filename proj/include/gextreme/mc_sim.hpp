#ifndef GEXTREME_MC_SIM_HPP
#define GEXTREME_MC_SIM_HPP

#include <cstdint>

#include "gextreme/normal.hpp"
#include "gextreme/normalization.hpp"

namespace gextreme {

/// Seeded Monte Carlo tail estimate with a 95% Wilson interval mapped to
/// the log scale. Fully determined by (n, x, samples, seed).
struct McEstimate {
    std::int64_t n;
    double x;
    std::int64_t samples;
    std::int64_t hits;
    LogProb log_p_hat;
    LogProb ci_lo;
    LogProb ci_hi;
    std::uint64_t seed;
};

/// RNG contract (v1): sample i of stream `seed` is the SplitMix64 output
/// at state seed + (i+1)*0x9E3779B97F4A7C15, mapped to (0,1) open via
/// (mix >> 11 + 0.5) * 2^-53. Counter-based, so any partition of the
/// index range across workers reproduces the serial stream exactly.
double uniform_open01(std::uint64_t seed, std::uint64_t index);

/// One exact draw of the maximum of n standard normals from a single
/// uniform: Phi^{-1}(u^{1/n}) evaluated as inv_cdf_log(log(u)/n), so
/// n = 10^12 costs the same as n = 10. Valid for n >= 1.
double sample_max(std::int64_t n, double u);
double sample_max(const NormalizationParams& p, double u);

/// Estimates P(Z_n > x) from `samples` seeded draws. The hit count is an
/// exact integer reduction over a counter-based stream, so the result is
/// byte-identical for any thread count. threads = 0 uses the OpenMP
/// default.
McEstimate estimate_tail(const NormalizationParams& p, double x,
                         std::int64_t samples, std::uint64_t seed,
                         int threads = 0);

/// Single-threaded reference; bit-identical to estimate_tail.
McEstimate estimate_tail_serial(const NormalizationParams& p, double x,
                                std::int64_t samples, std::uint64_t seed);

} // namespace gextreme

#endif
