#ifndef GEXTREME_DIAGNOSTICS_HPP
#define GEXTREME_DIAGNOSTICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gextreme {

/// Values of one asymptotic gauge along a ladder of sample sizes.
/// monotone_decreasing reports whether the gauge's deviation from its
/// limit (stated in the label; the values themselves for limits to 0,
/// |value - 1| for ratios tending to 1) strictly decreases along the
/// ladder. final_value is the report's headline scalar -- the last gauge
/// value, except for the Mills-inequality report, where it carries the
/// empirically located threshold t0 (see check_mills_bounds_log).
struct ConvergenceReport {
    std::string label;
    std::vector<std::int64_t> ladder;
    std::vector<double> values;
    bool monotone_decreasing;
    double final_value;
};

/// log(-log Phi(t)) for t > 0, stable arbitrarily deep: once -log Phi
/// sinks below doubles it equals log(1-Phi(t)) to full precision.
double log_neg_log_cdf(double t);

/// Verifies, entirely in the log domain, the two Mills-ratio bounds:
///   (i)  -log Phi(t) <= 2 phi(t)/t        from some t0 on,
///   (ii) 1 - Phi(t)^n <= n phi(t)/t       for all t > 0, n.
/// Both sides of (i) are compared through their logs (log_neg_log_cdf vs
/// log 2 + log phi - log t), so the test is informative out to t = 40 and
/// beyond. values[i] = max over the t-grid of the log-domain slack
/// LHS - RHS of (ii) at n = ladder[i] (<= 0 when the bound holds);
/// final_value = smallest grid t from which (i) holds through the grid's
/// end (+inf if none). Throws std::domain_error on t <= 0 or n < 2.
ConvergenceReport check_mills_bounds_log(std::span<const double> t_grid,
                                   std::span<const std::int64_t> n_ladder);

/// values[i] = n phi(b_n)/b_n, the gauge that tends to 1;
/// monotone_decreasing tracks |value - 1|.
ConvergenceReport bn_limit_seq(std::span<const std::int64_t> n_ladder);

/// sup over x in {0, step, ..., M} of |log f_n(x)/log n + rate(x)|:
/// the uniform density-rate convergence error. Deterministic for any
/// thread count (exact max reduction).
double density_rate_error(std::int64_t n, double m, double grid_step,
                          int threads = 0);
double density_rate_error_serial(std::int64_t n, double m, double grid_step);

/// |log P(Z_n > x)/log n + rate(x)|, the tail-rate convergence error.
double tail_rate_error(std::int64_t n, double x);

/// density_rate_error along a ladder, packaged as a report (limit 0).
ConvergenceReport density_rate_report(std::span<const std::int64_t> n_ladder,
                                      double m, double grid_step,
                                      int threads = 0);

/// tail_rate_error along a ladder at fixed x, packaged as a report.
ConvergenceReport tail_rate_report(std::span<const std::int64_t> n_ladder,
                                   double x);

/// {10^3, 10^6, 10^9, 10^12}.
std::vector<std::int64_t> default_ladder();

} // namespace gextreme

#endif
