#include "hg3/degree_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

namespace hg3 {

DegreeSequence::DegreeSequence(std::vector<long long> degrees)
    : degrees_(std::move(degrees)) {
    for (long long d : degrees_) {
        if (d < 0) throw std::invalid_argument("negative degree");
    }
}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

long long DegreeSequence::min_degree() const {
    if (degrees_.empty()) throw std::invalid_argument("empty degree sequence");
    return *std::min_element(degrees_.begin(), degrees_.end());
}

long long DegreeSequence::max_degree() const {
    if (degrees_.empty()) throw std::invalid_argument("empty degree sequence");
    return *std::max_element(degrees_.begin(), degrees_.end());
}

bool DegreeSequence::within_max_degree() const {
    long long cap = choose2(static_cast<long long>(degrees_.size()) - 1);
    return std::all_of(degrees_.begin(), degrees_.end(),
                       [cap](long long d) { return d <= cap; });
}

DegreeSequence DegreeSequence::load(std::istream& in) {
    std::vector<long long> d;
    long long x;
    while (in >> x) d.push_back(x);
    return DegreeSequence(std::move(d));
}

void DegreeSequence::save(std::ostream& out) const {
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        out << degrees_[i] << '\n';
    }
}

bool handshake_ok(const DegreeSequence& d, long long t) {
    if (t < 1) throw std::invalid_argument("uniformity must be >= 1");
    return d.sum() % t == 0;
}

bool class_membership(const DegreeSequence& d, const Rational& c1,
                      const Rational& c2, double relaxation_eps) {
    if (d.empty()) throw std::invalid_argument("empty degree sequence");
    if (!(c1 > 0 && c1 <= c2 && c2 < 1)) {
        throw std::invalid_argument("require 0 < c1 <= c2 < 1");
    }
    if (!handshake_ok(d, 3)) return false;
    const long long n = static_cast<long long>(d.size());
    const Rational cap(choose2(n - 1));
    Rational lo = c1 * cap;
    if (relaxation_eps != 0.0) {
        if (relaxation_eps < 0 || relaxation_eps > 1) {
            throw std::invalid_argument("relaxation eps must be in (0,1]");
        }
        double slack = std::pow(static_cast<double>(n), 1.0 + relaxation_eps);
        lo -= Rational(slack);
    }
    const Rational hi = c2 * cap;
    for (long long deg : d.values()) {
        Rational r(deg);
        if (r < lo || r > hi) return false;
    }
    return true;
}

}  // namespace hg3
