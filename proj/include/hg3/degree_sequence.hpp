#ifndef HG3_DEGREE_SEQUENCE_HPP
#define HG3_DEGREE_SEQUENCE_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "hg3/common.hpp"

namespace hg3 {

/// A finite sequence of non-negative vertex degrees.
///
/// Degrees are stored in input order; sums are exact for n <= 1e6 and
/// d_i <= C(n-1,2) (both fit comfortably in 64 bits).
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<long long> degrees);

    std::size_t size() const { return degrees_.size(); }
    bool empty() const { return degrees_.empty(); }
    long long operator[](std::size_t i) const { return degrees_[i]; }
    const std::vector<long long>& values() const { return degrees_; }

    long long sum() const;
    long long min_degree() const;  // requires non-empty
    long long max_degree() const;  // requires non-empty

    /// true iff every degree is at most C(n-1,2) with n = size().
    bool within_max_degree() const;

    /// Whitespace/newline separated non-negative integers.
    static DegreeSequence load(std::istream& in);
    void save(std::ostream& out) const;

    bool operator==(const DegreeSequence&) const = default;

private:
    std::vector<long long> degrees_;
};

/// Generalized handshake: sum of degrees divisible by the uniformity t.
bool handshake_ok(const DegreeSequence& d, long long t);

/// Band membership for the class D(c1,c2): sum divisible by 3 and every
/// degree in [c1*C(n-1,2) - n^(1+eps), c2*C(n-1,2)]. Band endpoints are
/// compared exactly: c1*C(n-1,2) is an exact rational, and the relaxation
/// term n^(1+eps) is evaluated in double and then converted exactly to a
/// rational (a double is a rational), so the comparison itself never
/// involves floating-point rounding. relaxation_eps = 0 means no relaxation.
bool class_membership(const DegreeSequence& d, const Rational& c1,
                      const Rational& c2, double relaxation_eps = 0.0);

}  // namespace hg3

#endif
