#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "peano/error.hpp"

namespace peano {

using u128 = unsigned __int128;

/// Exact rational used for line parameters and target points.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational::backend_type,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int::backend_type,
                                             boost::multiprecision::et_off>;

/// Exact point of a target space; coordinates beyond size() are zero.
using Point = std::vector<Rational>;

inline u128 checked_pow(u128 base, unsigned exponent) {
    u128 result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<u128>::max() / base)
            fail(Errc::depth_overflow, "power exceeds 128-bit range");
        result *= base;
    }
    return result;
}

inline BigInt to_bigint(u128 value) {
    BigInt out = static_cast<std::uint64_t>(value >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(value);
    return out;
}

inline std::size_t msb_of(const BigInt& value) { return value == 0 ? 0 : boost::multiprecision::msb(value); }

inline u128 to_u128(const BigInt& value) {
    if (value < 0 || msb_of(value) > 127)
        fail(Errc::depth_overflow, "integer exceeds 128-bit range");
    const BigInt hi = value >> 64;
    const BigInt lo = value & BigInt(std::numeric_limits<std::uint64_t>::max());
    return (static_cast<u128>(hi.convert_to<std::uint64_t>()) << 64) | lo.convert_to<std::uint64_t>();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::vector<double> to_doubles(const Point& p) {
    std::vector<double> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(to_double(c));
    return out;
}

/// Exact conversion; every finite double is a dyadic rational.
inline Rational exact(double value) {
    require(std::isfinite(value), Errc::invalid_argument, "non-finite value");
    return Rational(value);
}

inline Point exact(const std::vector<double>& values) {
    Point out;
    out.reserve(values.size());
    for (double v : values) out.push_back(exact(v));
    return out;
}

inline BigInt floor_of(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
    return q;
}

/// Parses "p/q", "p", or a decimal literal such as "-1.25" or "2.5e-3" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    require(!s.empty(), Errc::invalid_argument, "empty rational literal");
    try {
        if (auto slash = s.find('/'); slash != std::string::npos) {
            BigInt p(s.substr(0, slash));
            BigInt q(s.substr(slash + 1));
            require(q != 0, Errc::invalid_argument, "zero denominator in '" + s + "'");
            return Rational(p, q);
        }
        std::string mantissa = s;
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string::npos) {
            mantissa = s.substr(0, e);
            exponent = std::stol(s.substr(e + 1));
        }
        bool negative = false;
        if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
            negative = mantissa[0] == '-';
            mantissa.erase(0, 1);
        }
        std::string digits;
        long fraction_digits = 0;
        bool seen_point = false;
        for (char c : mantissa) {
            if (c == '.') {
                require(!seen_point, Errc::invalid_argument, "malformed number '" + s + "'");
                seen_point = true;
            } else {
                require(c >= '0' && c <= '9', Errc::invalid_argument, "malformed number '" + s + "'");
                digits.push_back(c);
                if (seen_point) ++fraction_digits;
            }
        }
        require(!digits.empty(), Errc::invalid_argument, "malformed number '" + s + "'");
        BigInt value(digits);
        if (negative) value = -value;
        long scale = exponent - fraction_digits;
        BigInt ten_power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
        return scale >= 0 ? Rational(value * ten_power) : Rational(value, ten_power);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::invalid_argument, "malformed number '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace peano
