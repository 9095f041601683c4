#ifndef HG3_REALIZE_HPP
#define HG3_REALIZE_HPP

#include <utility>

#include "hg3/critical.hpp"

namespace hg3 {

/// Target shape of the extremal construction: n-k-1 degrees d_min, one
/// degree d_int, k degrees d_max.
struct ExtremalSpec {
    long long n = 0;
    long long k = 0;
    long long d_min = 0;
    long long d_int = 0;
    long long d_max = 0;

    long long sum() const {
        return (n - k - 1) * d_min + d_int + k * d_max;
    }
};

/// Builds a realization with exactly k vertices at d_max (indices 0..k-1),
/// one at d_int, and n-k-1 at d_min. Starts from the critical hypergraph
/// (or the empty hypergraph when k = 0), grows the max-degree small vertex
/// v_int to d_int with lexicographically smallest absent edges, tops up the
/// degree sum with lexicographically smallest absent edges, then drains the
/// overshoot with balancing flips and equalizes the remaining small part.
///
/// Requires d_min >= g(n,k,d_max), sum divisible by 3, k <= n-2, and
/// d_min <= d_int <= d_max <= C(n-1,2).
Hypergraph3 realize_extremal(const ExtremalSpec& spec);

/// Finds (k, d_int) with (n-k-1)*d_min + d_int + k*d_max = S and
/// d_min <= d_int <= d_max, choosing the smallest feasible k. Requires
/// n*d_min <= S <= n*d_max. Returns k = 0 with d_int = d_min when
/// d_min = d_max.
std::pair<long long, long long> decompose_sum(long long n, long long d_min,
                                              long long d_max, long long S);

/// One-sided decision: graphic when the sum is divisible by 3 and
/// min(D) >= g(n, k, max(D)) at the k that decompose_sum picks for D --
/// exactly the precondition under which realize() is guaranteed to
/// succeed. This is sharper than comparing against the scan maximum
/// g*(n, max(D)) and, unlike it, sound for sum-skewed sequences whose
/// decomposition k falls outside the g* scan range. below_threshold is
/// "unknown", not non-graphic.
enum class Graphicality { graphic, fails_mod3, below_threshold };

Graphicality decide_graphic_interval(const DegreeSequence& d);

/// Full realization for sequences decided graphic: decompose, build the
/// extremal realization, morph to the target multiset, then relabel so
/// degree(v_i) = D[i] for every i.
Hypergraph3 realize(const DegreeSequence& d);

}  // namespace hg3

#endif
