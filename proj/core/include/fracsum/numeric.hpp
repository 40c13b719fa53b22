#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/float128.hpp>

namespace fracsum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
// 113-bit significand, enough for the 1e-15 precision targets with headroom.
using Real = boost::multiprecision::float128;

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Error taxonomy mirrors the CLI exit codes (2 usage, 3 resource, 5 precision).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("u64 multiply overflow: " + std::to_string(a) + "*" + std::to_string(b));
    return r;
}

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("u64 add overflow");
    return r;
}

// floor(sqrt(n)), exact
inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

// floor(cbrt(n)), exact
inline u64 icbrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::cbrt(static_cast<double>(n)));
    if (r > 0) --r;
    while ((r + 1) * (r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline Real real_of(const Int& v) { return v.convert_to<Real>(); }

inline Real real_of(const Rat& v) {
    return real_of(boost::multiprecision::numerator(v)) /
           real_of(boost::multiprecision::denominator(v));
}

inline Int int_from_i128(i128 v) {
    bool neg = v < 0;
    u128 m = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    Int r = static_cast<u64>(m >> 64);
    r <<= 64;
    r += static_cast<u64>(m);
    return neg ? -r : r;
}

} // namespace fracsum
