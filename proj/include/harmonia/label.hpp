#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace harmonia {

// Exact arbitrary-precision signed integer. Labels grow doubly-exponentially
// in the grid construction, so no fixed-width type is ever safe.
using Label = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Label& v) { return v.str(); }

inline Label parse_label(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty label string");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign-only label string");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("non-decimal character in label: " + s);
    return Label(s);
}

// log10(1 + |v|), accurate to ~1e-12 even when v has thousands of digits.
inline double log10_abs1p(const Label& v) {
    if (v == 0) return 0.0;
    const std::string digits = to_decimal(abs(v));
    constexpr std::size_t kHead = 15;
    if (digits.size() <= kHead) {
        return std::log10(1.0 + static_cast<double>(abs(v).convert_to<double>()));
    }
    const double mantissa = std::stod(digits.substr(0, kHead)) / std::pow(10.0, kHead - 1);
    return std::log10(mantissa) + static_cast<double>(digits.size() - 1);
}

// Heatmap intensity: sign(v) * log10(1 + |v|).
inline double signed_log10(const Label& v) {
    const double m = log10_abs1p(v);
    return v < 0 ? -m : m;
}

}  // namespace harmonia
