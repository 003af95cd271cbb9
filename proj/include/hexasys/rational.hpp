#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hexasys/errors.hpp"

namespace hexasys {

/// Arbitrary-precision integer and rational scalar.  cpp_rational keeps the
/// value reduced (gcd(num, den) = 1, den >= 1), so the representation is
/// canonical and operator== is exact value equality.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/// Exact conversion to a machine integer; throws if the value is fractional
/// or out of range.
inline long long to_int64(const Rational& r) {
    if (!is_integer(r)) throw Error("not an integer: " + r.str());
    return num(r).convert_to<long long>();
}

inline Rational rational(long long n, long long d = 1) { return Rational(n, d); }

/// Serializes as "num/den", or just "num" for integers.
inline std::string rational_to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

/// Parses "num" or "num/den" (optional leading '-').  Returns nullopt on
/// malformed input.
inline std::optional<Rational> parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rational(Int(std::string(s)));
        }
        std::string_view ns = s.substr(0, slash);
        std::string_view ds = s.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds)) return std::nullopt;
        Int n{std::string(ns)}, d{std::string(ds)};
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace hexasys
