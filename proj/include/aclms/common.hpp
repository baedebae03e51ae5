#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aclms {

/// Shortest decimal string that round-trips the exact double value.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("parse_double: malformed value '" + std::string(s) + "'");
    return v;
}

namespace detail {

inline void require_same_size(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (expected " +
                                    std::to_string(expected) + ", got " + std::to_string(got) + ")");
}

inline void require_finite(std::span<const double> x, double d, const char* what) {
    if (!std::isfinite(d))
        throw std::invalid_argument(std::string(what) + ": non-finite desired sample");
    for (double v : x)
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(what) + ": non-finite regressor entry");
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        acc += diff * diff;
    }
    return acc;
}

// sgn(0) = 0, so the zero vector stays a fixed point of the attractor.
inline double sgn(double v) {
    return (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
}

} // namespace detail
} // namespace aclms
