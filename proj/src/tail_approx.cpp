#include "gextreme/tail_approx.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gextreme {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(sum exp(v_i)) over a short list of log-probabilities.
double log_sum_exp(std::span<const double> vals) {
    double m = -kInf;
    for (double v : vals) m = std::max(m, v);
    if (m == -kInf) return -kInf;
    double s = 0.0;
    for (double v : vals) s += std::exp(v - m);
    return m + std::log(s);
}

TailComparisonRow make_row(const NormalizationParams& p, double x) {
    return TailComparisonRow{
        x,
        log_tail_exact(p, x),
        log_tail_gumbel(p, x),
        LogProb{-rate(x) * p.log_n},
    };
}

} // namespace

LogProb log_cdf_exact(const NormalizationParams& p, double x) {
    const double lcdf = log_cdf(t_of_x(p, x)).value;
    return LogProb{static_cast<double>(p.n) * lcdf};
}

LogProb log_tail_exact(const NormalizationParams& p, double x) {
    return log_sf_pow(t_of_x(p, x), static_cast<double>(p.n));
}

LogProb log_prob_set_exact(const NormalizationParams& p, const IntervalUnion& a) {
    if (!is_normalized(a))
        throw std::invalid_argument("log_prob_set_exact: set is not normalized");
    std::vector<double> parts;
    parts.reserve(a.parts.size());
    for (const Interval& part : a.parts) {
        if (part.hi == part.lo) continue;  // null set, contributes nothing
        if (part.hi == kInf) {
            parts.push_back(log_tail_exact(p, part.lo).value);
            continue;
        }
        const double f_lo = log_cdf_exact(p, part.lo).value;
        // In the deep tail both CDFs are ~1 and their logs cancel; the
        // survival difference SF(lo) - SF(hi) carries the value instead.
        if (f_lo > -0.6931471805599453) {
            parts.push_back(log_diff_exp(log_tail_exact(p, part.lo).value,
                                         log_tail_exact(p, part.hi).value));
        } else {
            parts.push_back(log_diff_exp(log_cdf_exact(p, part.hi).value, f_lo));
        }
    }
    return LogProb{log_sum_exp(parts)};
}

LogProb log_tail_gumbel(const NormalizationParams& p, double x) {
    if (!std::isfinite(x))
        throw std::domain_error("log_tail_gumbel: non-finite x");
    const double y = x * p.log_n;
    if (y > 30.0) {
        // 1 - Lambda = eps - eps^2/2 + ..., eps = e^-y < 1e-13; the
        // correction keeps full precision even when eps underflows.
        const double eps = std::exp(-y);
        return LogProb{-y + std::log1p(-0.5 * eps)};
    }
    return LogProb{log1mexp(-std::exp(-y))};
}

LogProb log_prob_ldp(const NormalizationParams& p, const IntervalUnion& a) {
    if (!is_normalized(a))
        throw std::invalid_argument("log_prob_ldp: set is not normalized");
    const double i_a = ess_inf_rate(a);
    if (i_a == kInf) return LogProb{-kInf};
    return LogProb{-p.log_n * i_a};
}

double log_density(const NormalizationParams& p, double x) {
    const double t = t_of_x(p, x);
    const double n = static_cast<double>(p.n);
    return p.log_n + std::log(0.5 * p.a_n) + (n - 1.0) * log_cdf(t).value +
           log_pdf(t);
}

std::vector<TailComparisonRow> compare_grid(const NormalizationParams& p,
                                            std::span<const double> xs,
                                            int threads) {
    if (!std::is_sorted(xs.begin(), xs.end()))
        throw std::domain_error("compare_grid: xs must be sorted ascending");
    for (double x : xs)
        if (!std::isfinite(x) || x < 0.0)
            throw std::domain_error("compare_grid: grid points must be finite and >= 0");

    std::vector<TailComparisonRow> rows(xs.size());
#ifdef _OPENMP
    const std::int64_t count = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : omp_get_max_threads())
    for (std::int64_t i = 0; i < count; ++i)
        rows[static_cast<std::size_t>(i)] = make_row(p, xs[static_cast<std::size_t>(i)]);
#else
    (void)threads;
    for (std::size_t i = 0; i < xs.size(); ++i) rows[i] = make_row(p, xs[i]);
#endif
    return rows;
}

std::vector<TailComparisonRow> compare_grid_serial(const NormalizationParams& p,
                                                   std::span<const double> xs) {
    if (!std::is_sorted(xs.begin(), xs.end()))
        throw std::domain_error("compare_grid: xs must be sorted ascending");
    for (double x : xs)
        if (!std::isfinite(x) || x < 0.0)
            throw std::domain_error("compare_grid: grid points must be finite and >= 0");
    std::vector<TailComparisonRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) rows.push_back(make_row(p, x));
    return rows;
}

} // namespace gextreme
