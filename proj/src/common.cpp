#include "hg3/common.hpp"

#include <cctype>

namespace hg3 {

BigInt big_binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

Rational parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = (s[pos] == '-');
        ++pos;
    }
    BigInt num = 0;
    BigInt den = 1;
    bool seen_digit = false;
    bool seen_dot = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("malformed decimal: " + s);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            num = num * 10 + (c - '0');
            if (seen_dot) den *= 10;
            seen_digit = true;
        } else {
            throw std::invalid_argument("malformed decimal: " + s);
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed decimal: " + s);
    Rational r(num, den);
    return neg ? -r : r;
}

BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

BigInt rational_ceil(const Rational& r) {
    BigInt f = rational_floor(r);
    return f * denominator(r) == numerator(r) ? f : f + 1;
}

}  // namespace hg3
