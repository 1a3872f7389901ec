#ifndef GEXTREME_RATE_SET_HPP
#define GEXTREME_RATE_SET_HPP

#include <string>
#include <string_view>
#include <vector>

namespace gextreme {

/// One interval of [0, inf]. lo == hi with both ends closed is a
/// singleton; hi may be +infinity (then hi_closed must be false).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;
};

/// Finite union of intervals within [0, inf) -- the representable sets
/// fed to the rate-function and tail-probability machinery.
struct IntervalUnion {
    std::vector<Interval> parts;
};

/// The decay-rate function x + x^2/4, strictly increasing and convex on
/// [0, inf). x < 0 throws std::domain_error.
double rate(double x);

/// Canonical form: validated, sorted by lo, touching/overlapping parts
/// merged, empty parts dropped. Idempotent. Throws std::domain_error on
/// lo > hi, negative endpoints, or NaN.
IntervalUnion normalize_set(const IntervalUnion& raw);

/// True iff `a` is already in the canonical form normalize_set produces.
bool is_normalized(const IntervalUnion& a);

/// Essential infimum of rate() over `a` w.r.t. Lebesgue measure: the
/// minimum of rate(lo) over positive-length parts, +infinity when every
/// part is a singleton or the union is empty. Requires normalized input
/// (std::invalid_argument otherwise).
double ess_inf_rate(const IntervalUnion& a);

/// Parses the CLI set syntax: comma-separated parts, each one of
///   [a,b]  (a,b)  [a,b)  (a,b]  {a}  [a,inf)
/// e.g. "[1,2],{5},(3,inf)". Throws std::domain_error on malformed text.
/// The result is raw; callers normalize.
IntervalUnion parse_interval_union(std::string_view text);

/// Round-trippable text form of a normalized union, e.g. "[1,2],{5}".
std::string to_string(const IntervalUnion& a);

} // namespace gextreme

#endif
