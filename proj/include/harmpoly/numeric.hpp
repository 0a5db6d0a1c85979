#ifndef HARMPOLY_NUMERIC_HPP
#define HARMPOLY_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace harmpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Raised when two computation routes of the same quantity disagree.
/// This is never expected to happen; it signals a bug, not bad input.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0)
        throw std::domain_error("zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        BigInt den(text.substr(slash + 1));
        if (den == 0)
            throw std::domain_error("zero denominator in '" + text + "'");
        return Rational(BigInt(text.substr(0, slash)), den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::uint64_t isqrt(std::uint64_t v) {
    std::uint64_t lo = 0, hi = std::uint64_t{1} << 32;
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (mid * mid <= v)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace harmpoly

#endif
