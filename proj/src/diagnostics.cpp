#include "gextreme/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gextreme/normal.hpp"
#include "gextreme/normalization.hpp"
#include "gextreme/rate_set.hpp"
#include "gextreme/tail_approx.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gextreme {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool strictly_decreasing(std::span<const double> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

std::vector<double> gauge_deviation(std::span<const double> values, double limit) {
    std::vector<double> dev(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        dev[i] = std::fabs(values[i] - limit);
    return dev;
}

} // namespace

double log_neg_log_cdf(double t) {
    if (!(t > 0.0)) throw std::domain_error("log_neg_log_cdf: t must be > 0");
    const double lcdf = log_cdf(t).value;
    if (lcdf < -1e-300) return std::log(-lcdf);
    // -log Phi = Q*(1 + Q/2 + ...) with Q < 1e-300: the correction is
    // far below double resolution, so log Q carries the exact value.
    return log_sf(t).value;
}

ConvergenceReport check_mills_bounds_log(std::span<const double> t_grid,
                                   std::span<const std::int64_t> n_ladder) {
    for (double t : t_grid)
        if (!(t > 0.0) || !std::isfinite(t))
            throw std::domain_error("check_mills_bounds_log: t grid must be > 0");
    for (std::int64_t n : n_ladder)
        if (n < 2) throw std::domain_error("check_mills_bounds_log: n must be >= 2");

    // (i): -log Phi(t) <= 2 phi(t)/t, compared through logs of both
    // sides. Find the smallest grid t from which the bound holds through
    // the end of the grid.
    constexpr double kLn2 = 0.6931471805599453;
    double t0 = kInf;
    for (std::size_t i = t_grid.size(); i-- > 0;) {
        const double t = t_grid[i];
        const double lhs = log_neg_log_cdf(t);
        const double rhs = kLn2 + log_pdf(t) - std::log(t);
        if (lhs <= rhs)
            t0 = t;
        else
            break;
    }

    // (ii): log(1 - Phi(t)^n) <= log n + log phi(t) - log t.  Slack is
    // LHS - RHS, <= 0 whenever the bound holds. The LHS goes through
    // log_sf_pow so nothing is lost to underflow at large t.
    ConvergenceReport rep;
    rep.label = "mills bounds: max slack of log(1-Phi(t)^n) <= log n + log phi(t) - log t "
                "per n; final_value = empirical t0 of -log Phi(t) <= 2 phi(t)/t";
    rep.ladder.assign(n_ladder.begin(), n_ladder.end());
    rep.values.reserve(n_ladder.size());
    for (std::int64_t n : n_ladder) {
        const double nd = static_cast<double>(n);
        double worst = -kInf;
        for (double t : t_grid) {
            const double lhs = log_sf_pow(t, nd).value;
            const double rhs = std::log(nd) + log_pdf(t) - std::log(t);
            worst = std::max(worst, lhs - rhs);
        }
        rep.values.push_back(worst);
    }
    rep.monotone_decreasing = strictly_decreasing(rep.values);
    rep.final_value = t0;
    return rep;
}

ConvergenceReport bn_limit_seq(std::span<const std::int64_t> n_ladder) {
    ConvergenceReport rep;
    rep.label = "bn limit: n phi(b_n)/b_n -> 1; flag tracks |value - 1|";
    rep.ladder.assign(n_ladder.begin(), n_ladder.end());
    rep.values.reserve(n_ladder.size());
    for (std::int64_t n : n_ladder) {
        const NormalizationParams p = make_norm(n);
        rep.values.push_back(
            std::exp(p.log_n + log_pdf(p.b_n) - std::log(p.b_n)));
    }
    rep.monotone_decreasing = strictly_decreasing(gauge_deviation(rep.values, 1.0));
    rep.final_value = rep.values.empty() ? kInf : rep.values.back();
    return rep;
}

double density_rate_error(std::int64_t n, double m, double grid_step,
                          int threads) {
    if (n < 2) throw std::domain_error("density_rate_error: n must be >= 2");
    if (!(grid_step > 0.0) || !(grid_step < m))
        throw std::domain_error("density_rate_error: need 0 < step < M");
    const NormalizationParams p = make_norm(n);
    const std::int64_t count =
        static_cast<std::int64_t>(std::floor(m / grid_step + 1e-9)) + 1;
    double sup = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : sup) \
    num_threads(threads > 0 ? threads : omp_get_max_threads())
#else
    (void)threads;
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        const double x = std::min(static_cast<double>(i) * grid_step, m);
        const double err = std::fabs(log_density(p, x) / p.log_n + rate(x));
        sup = std::max(sup, err);
    }
    return sup;
}

double density_rate_error_serial(std::int64_t n, double m, double grid_step) {
    if (n < 2) throw std::domain_error("density_rate_error: n must be >= 2");
    if (!(grid_step > 0.0) || !(grid_step < m))
        throw std::domain_error("density_rate_error: need 0 < step < M");
    const NormalizationParams p = make_norm(n);
    const std::int64_t count =
        static_cast<std::int64_t>(std::floor(m / grid_step + 1e-9)) + 1;
    double sup = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
        const double x = std::min(static_cast<double>(i) * grid_step, m);
        sup = std::max(sup, std::fabs(log_density(p, x) / p.log_n + rate(x)));
    }
    return sup;
}

double tail_rate_error(std::int64_t n, double x) {
    if (n < 2) throw std::domain_error("tail_rate_error: n must be >= 2");
    if (!(x > 0.0)) throw std::domain_error("tail_rate_error: x must be > 0");
    const NormalizationParams p = make_norm(n);
    return std::fabs(log_tail_exact(p, x).value / p.log_n + rate(x));
}

ConvergenceReport density_rate_report(std::span<const std::int64_t> n_ladder,
                                      double m, double grid_step, int threads) {
    ConvergenceReport rep;
    rep.label = "density rate: sup_[0,M] |log f_n(x)/log n + I(x)| -> 0";
    rep.ladder.assign(n_ladder.begin(), n_ladder.end());
    for (std::int64_t n : n_ladder)
        rep.values.push_back(density_rate_error(n, m, grid_step, threads));
    rep.monotone_decreasing = strictly_decreasing(rep.values);
    rep.final_value = rep.values.empty() ? kInf : rep.values.back();
    return rep;
}

ConvergenceReport tail_rate_report(std::span<const std::int64_t> n_ladder,
                                   double x) {
    ConvergenceReport rep;
    rep.label = "tail rate: |log P(Z_n > x)/log n + I(x)| -> 0 at x = " +
                std::to_string(x);
    rep.ladder.assign(n_ladder.begin(), n_ladder.end());
    for (std::int64_t n : n_ladder) rep.values.push_back(tail_rate_error(n, x));
    rep.monotone_decreasing = strictly_decreasing(rep.values);
    rep.final_value = rep.values.empty() ? kInf : rep.values.back();
    return rep;
}

std::vector<std::int64_t> default_ladder() {
    return {1000, 1000000, 1000000000, 1000000000000};
}

} // namespace gextreme
