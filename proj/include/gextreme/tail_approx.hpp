#ifndef GEXTREME_TAIL_APPROX_HPP
#define GEXTREME_TAIL_APPROX_HPP

#include <span>
#include <vector>

#include "gextreme/normal.hpp"
#include "gextreme/normalization.hpp"
#include "gextreme/rate_set.hpp"

namespace gextreme {

/// One comparison-grid row: the three log-tail evaluations at x,
/// natural-log units (base-10 conversion happens at serialization).
struct TailComparisonRow {
    double x;
    LogProb log_exact;
    LogProb log_gumbel;
    LogProb log_ldp;
};

/// log F_n(x) = n log Phi(t_n(x)).
LogProb log_cdf_exact(const NormalizationParams& p, double x);

/// log P(Z_n > x) = log(1 - Phi(t_n(x))^n). Finite for every finite x,
/// no matter how far below double underflow the probability is.
LogProb log_tail_exact(const NormalizationParams& p, double x);

/// log P(Z_n in a) for a normalized interval union: per-part CDF
/// differences in the log domain, log-sum-exp across parts. Endpoint
/// open/closed flags are irrelevant (Z_n has a density).
/// Throws std::invalid_argument on non-normalized input.
LogProb log_prob_set_exact(const NormalizationParams& p, const IntervalUnion& a);

/// Gumbel approximation of P(Z_n > x): log(1 - Lambda(x log n)) with
/// Lambda(y) = exp(-e^-y), stable in both directions (for large x log n
/// this is ~ -x log n, not -inf).
LogProb log_tail_gumbel(const NormalizationParams& p, double x);

/// Large-deviation approximation: -log n * ess_inf_rate(a);
/// -infinity when the set is Lebesgue-null.
LogProb log_prob_ldp(const NormalizationParams& p, const IntervalUnion& a);

/// log f_n(x) = log(n a_n/2) + (n-1) log Phi(t_n(x)) + log phi(t_n(x)).
/// A log-density, not a log-probability: may be positive.
double log_density(const NormalizationParams& p, double x);

/// One TailComparisonRow per grid point; xs must be sorted ascending
/// (std::domain_error otherwise) and nonnegative. Rows are evaluated in
/// parallel; output order and values are independent of thread count.
std::vector<TailComparisonRow> compare_grid(const NormalizationParams& p,
                                            std::span<const double> xs,
                                            int threads = 0);

/// Single-threaded reference for compare_grid; bit-identical results.
std::vector<TailComparisonRow> compare_grid_serial(const NormalizationParams& p,
                                                   std::span<const double> xs);

} // namespace gextreme

#endif
