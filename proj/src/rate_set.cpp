#include "gextreme/rate_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace gextreme {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_part(const Interval& p) {
    if (std::isnan(p.lo) || std::isnan(p.hi))
        throw std::domain_error("interval endpoint is NaN");
    if (p.lo < 0.0)
        throw std::domain_error("interval endpoint below 0");
    if (p.lo > p.hi)
        throw std::domain_error("interval with lo > hi");
    if (p.lo == kInf)
        throw std::domain_error("interval starting at infinity");
    if (p.hi == kInf && p.hi_closed)
        throw std::domain_error("interval closed at infinity");
}

bool is_empty(const Interval& p) {
    return p.lo == p.hi && !(p.lo_closed && p.hi_closed);
}

// Touching or overlapping: [a,b] + [b,c] merge when the shared endpoint
// is covered by at least one side.
bool mergeable(const Interval& a, const Interval& b) {
    if (b.lo < a.hi) return true;
    return b.lo == a.hi && (a.hi_closed || b.lo_closed);
}

} // namespace

double rate(double x) {
    if (std::isnan(x) || x < 0.0)
        throw std::domain_error("rate: x must be >= 0");
    return x + 0.25 * x * x;
}

IntervalUnion normalize_set(const IntervalUnion& raw) {
    std::vector<Interval> parts;
    parts.reserve(raw.parts.size());
    for (const Interval& p : raw.parts) {
        validate_part(p);
        if (!is_empty(p)) parts.push_back(p);
    }
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });

    IntervalUnion out;
    for (const Interval& p : parts) {
        if (!out.parts.empty() && mergeable(out.parts.back(), p)) {
            Interval& cur = out.parts.back();
            if (p.lo == cur.lo) cur.lo_closed = cur.lo_closed || p.lo_closed;
            if (p.hi > cur.hi) {
                cur.hi = p.hi;
                cur.hi_closed = p.hi_closed;
            } else if (p.hi == cur.hi) {
                cur.hi_closed = cur.hi_closed || p.hi_closed;
            }
        } else {
            out.parts.push_back(p);
        }
    }
    return out;
}

bool is_normalized(const IntervalUnion& a) {
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        const Interval& p = a.parts[i];
        if (std::isnan(p.lo) || std::isnan(p.hi) || p.lo < 0.0 || p.lo > p.hi)
            return false;
        if (p.lo == kInf || (p.hi == kInf && p.hi_closed)) return false;
        if (is_empty(p)) return false;
        if (i > 0 && mergeable(a.parts[i - 1], p)) return false;
        if (i > 0 && p.lo < a.parts[i - 1].lo) return false;
    }
    return true;
}

double ess_inf_rate(const IntervalUnion& a) {
    if (!is_normalized(a))
        throw std::invalid_argument("ess_inf_rate: set is not normalized");
    double best = kInf;
    for (const Interval& p : a.parts) {
        if (p.hi > p.lo)  // singletons are Lebesgue-null
            best = std::min(best, rate(p.lo));
    }
    return best;
}

namespace {

double parse_number(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s == "inf" || s == "+inf") return kInf;
    if (s.empty()) throw std::domain_error("set syntax: empty number");
    char* end = nullptr;
    const std::string buf(s);
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size())
        throw std::domain_error("set syntax: bad number '" + buf + "'");
    return v;
}

} // namespace

IntervalUnion parse_interval_union(std::string_view text) {
    IntervalUnion out;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == text.size())
        throw std::domain_error("set syntax: empty set expression");
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) throw std::domain_error("set syntax: trailing comma");
        const char open = text[i];
        if (open == '{') {
            const std::size_t close = text.find('}', i);
            if (close == std::string_view::npos)
                throw std::domain_error("set syntax: unterminated '{'");
            const double v = parse_number(text.substr(i + 1, close - i - 1));
            out.parts.push_back(Interval{v, v, true, true});
            i = close + 1;
        } else if (open == '[' || open == '(') {
            std::size_t close = i + 1;
            for (; close < text.size() && text[close] != ']' && text[close] != ')'; ++close) {}
            if (close == text.size())
                throw std::domain_error("set syntax: unterminated interval");
            const std::string_view body = text.substr(i + 1, close - i - 1);
            const std::size_t comma = body.find(',');
            if (comma == std::string_view::npos)
                throw std::domain_error("set syntax: interval needs two endpoints");
            Interval p;
            p.lo = parse_number(body.substr(0, comma));
            p.hi = parse_number(body.substr(comma + 1));
            p.lo_closed = (open == '[');
            p.hi_closed = (text[close] == ']');
            out.parts.push_back(p);
            i = close + 1;
        } else {
            throw std::domain_error("set syntax: expected '[', '(' or '{'");
        }
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',')
                throw std::domain_error("set syntax: expected ',' between parts");
            ++i;
            skip_ws();
            if (i == text.size())
                throw std::domain_error("set syntax: trailing comma");
        }
    }
    return out;
}

std::string to_string(const IntervalUnion& a) {
    std::string s;
    char buf[64];
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        const Interval& p = a.parts[i];
        if (i) s += ',';
        if (p.lo == p.hi) {
            std::snprintf(buf, sizeof buf, "{%.17g}", p.lo);
            s += buf;
            continue;
        }
        s += p.lo_closed ? '[' : '(';
        std::snprintf(buf, sizeof buf, "%.17g,", p.lo);
        s += buf;
        if (p.hi == kInf)
            s += "inf";
        else {
            std::snprintf(buf, sizeof buf, "%.17g", p.hi);
            s += buf;
        }
        s += p.hi_closed ? ']' : ')';
    }
    return s;
}

} // namespace gextreme
