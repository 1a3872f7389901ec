#ifndef GEXTREME_NORMALIZATION_HPP
#define GEXTREME_NORMALIZATION_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gextreme {

/// Normalizing constants for the maximum of n standard normals:
///   a_n = sqrt(2 log n),  b_n = a_n - log(sqrt(2 pi) a_n)/a_n.
/// The rescaled maximum is Z_n = (X_(n) - b_n)/(a_n/2). Everything
/// downstream depends on n only through log n, so n up to 2^63-1 is fine.
struct NormalizationParams {
    std::int64_t n;
    double a_n;
    double b_n;
    double log_n;
};

inline NormalizationParams make_norm(std::int64_t n) {
    if (n < 2)
        throw std::domain_error("make_norm: n must be >= 2");
    const double log_n = std::log(static_cast<double>(n));
    const double a = std::sqrt(2.0 * log_n);
    const double b = a - std::log(std::sqrt(2.0 * 3.14159265358979323846) * a) / a;
    return NormalizationParams{n, a, b, log_n};
}

/// t_n(x) = b_n + a_n x / 2, the raw-axis point behind rescaled x.
inline double t_of_x(const NormalizationParams& p, double x) {
    if (!std::isfinite(x))
        throw std::domain_error("t_of_x: non-finite x");
    return p.b_n + 0.5 * p.a_n * x;
}

/// Inverse of t_of_x: the rescaled coordinate of a raw maximum m.
inline double z_of_max(const NormalizationParams& p, double m) {
    if (!std::isfinite(m))
        throw std::domain_error("z_of_max: non-finite m");
    return (m - p.b_n) / (0.5 * p.a_n);
}

} // namespace gextreme

#endif
