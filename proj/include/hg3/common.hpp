#ifndef HG3_COMMON_HPP
#define HG3_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hg3 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a step that is guaranteed to succeed (by a structural
// argument) fails at runtime. Always indicates a bug upstream.
struct InternalInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// C(x,2); 0 for x < 2. Safe for x up to ~4e9.
constexpr long long choose2(long long x) {
    return x < 2 ? 0 : x * (x - 1) / 2;
}

// C(x,3); 0 for x < 3.
constexpr long long choose3(long long x) {
    return x < 3 ? 0 : (x * (x - 1) / 2) * (x - 2) / 3;
}

// C(n,k) in arbitrary precision. 0 for k < 0 or k > n.
BigInt big_binom(long long n, long long k);

// ceil(a/b) and floor(a/b) for b > 0, correct for negative a.
constexpr long long ceil_div(long long a, long long b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
constexpr long long floor_div(long long a, long long b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

// Parses a decimal string ("0.721934", "3", "-1.5") into an exact rational.
Rational parse_decimal(const std::string& s);

// floor(r) and ceil(r) for a rational, as BigInt.
BigInt rational_floor(const Rational& r);
BigInt rational_ceil(const Rational& r);

}  // namespace hg3

#endif
