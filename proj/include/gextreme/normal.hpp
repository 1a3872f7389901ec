#ifndef GEXTREME_NORMAL_HPP
#define GEXTREME_NORMAL_HPP

#include <limits>

namespace gextreme {

/// Log of a probability, natural-log units. value <= 0 always;
/// -infinity encodes probability exactly 0. This is the currency every
/// tail quantity in the library is carried in, so that probabilities far
/// below double underflow (1e-300000 and beyond) stay representable.
struct LogProb {
    double value = -std::numeric_limits<double>::infinity();
};

/// Validated constructor: rejects value > 0 and NaN with std::domain_error.
LogProb log_prob(double value);

/// log of the standard normal density: -t^2/2 - log(2*pi)/2.
/// Throws std::domain_error for non-finite t.
double log_pdf(double t);

/// log Phi(t). For t >= 0 evaluated as log1p(-Q(t)); for t < 0 evaluated
/// from the upper-tail expansion at |t| (continued fraction for |t| in
/// [1,14), asymptotic series with a truncation bound beyond), so nothing
/// underflows down to t = -40 and far past it.
LogProb log_cdf(double t);

/// log(1 - Phi(t)) = log_cdf(-t), by symmetry of the density.
LogProb log_sf(double t);

/// log(1 - Phi(t)^n) for real n >= 1, evaluated without forming
/// Phi(t)^n. The deep-tail branch (n*log Phi below double range) switches
/// to log n + log Q(t), which is exact to higher order there.
LogProb log_sf_pow(double t, double n);

/// Quantile in log-probability space: returns t with log_cdf(t) = lp
/// to within 1e-12*|lp| + 1e-14, valid for |lp| up to 1e6 and beyond.
/// lp = 0 or -infinity -> std::range_error (infinite quantile);
/// lp > 0 -> std::domain_error.
double inv_cdf_log(LogProb lp);

/// Stable log(1 - exp(a)) for a <= 0. Splits at a = -log 2 between
/// log(-expm1(a)) and log1p(-exp(a)). a = 0 returns -infinity;
/// a > 0 throws std::domain_error.
double log1mexp(double a);

/// log(e^a - e^b) = a + log1mexp(b - a) for a >= b (both log-probs).
/// Returns -infinity when a == b; a < b throws std::domain_error.
double log_diff_exp(double a, double b);

} // namespace gextreme

#endif
