#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace wplink {

// Exact arithmetic backing.  Divisor indices and curve invariants can outgrow
// machine words (lcm growth under repeated products), so everything that
// multiplies indices or accumulates rationals goes through these.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline long long gcd_all(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    return g;
}

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string to_string(const Int& v) { return v.str(); }

/// Narrow an Int to long long; the caller asserts the value is in range.
long long to_ll(const Int& v);

} // namespace wplink
