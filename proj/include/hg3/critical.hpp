#ifndef HG3_CRITICAL_HPP
#define HG3_CRITICAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "hg3/hingeflip.hpp"
#include "hg3/partition.hpp"

namespace hg3 {

/// Which small-degree formula applies for (n, k, d_max):
///   C0: d_max <= C(k-1,2)
///   C1: C(k-1,2) < d_max <= C(k-1,2) + (n-k)(k-1)
///   C2: d_max above the C1 range
enum class CriticalCase { C0, C1, C2 };

CriticalCase critical_case(long long n, long long k, long long d_max);

/// Validated parameters of the critical degree sequence class.
struct CriticalParams {
    long long n = 0;
    long long k = 0;
    long long d_max = 0;

    CriticalCase case_tag() const { return critical_case(n, k, d_max); }
};

/// Empty when (n,k,d_max) is admissible; otherwise one message per violated
/// restriction.
std::vector<std::string> param_violations(long long n, long long k,
                                          long long d_max);

/// Throws std::invalid_argument listing violations if any.
CriticalParams validate_params(long long n, long long k, long long d_max);

/// Exact small-degree sum of the critical sequence (the s of cases C1/C2;
/// the count of degree-1 vertices in C0).
long long small_degree_sum(const CriticalParams& p);

/// The critical degree sequence D(n,k,d_max), sorted ascending.
DegreeSequence critical_sequence(const CriticalParams& p);

/// Constructs a realization of the critical sequence: batch edges of the
/// case-mandated types in lexicographic order, then equalize V_L to regular
/// d_max and V_S to almost-regular. The partition labels vertices 0..k-1 as
/// L and the rest as S.
///
/// With skip_rounding_edge (meaningful only in case C1 with odd parity),
/// the single 1L2S parity edge is dropped from the result, leaving one
/// L-vertex at d_max - 1.
std::pair<Hypergraph3, VertexPartition> critical_hypergraph(
    const CriticalParams& p, bool skip_rounding_edge = false);

/// Average small degree of the critical sequence, exact. Requires k <= n-1.
Rational f0_exact(long long n, long long k, long long d_max);

/// f = ceil(f0).
long long f_val(long long n, long long k, long long d_max);

/// g = f + ceil(2(d_max - f)/(n-k-1)). Requires k <= n-2.
long long g_val(long long n, long long k, long long d_max);

struct ScanResult {
    long long value = 0;
    long long k = 0;  // smallest maximizer
};

/// f*(n,d_max) = max over admissible k in {1..n-1} of f(n,k,d_max), and the
/// smallest maximizing k. OpenMP-parallel over k; f_star_serial is the
/// serial reference kept for testing.
ScanResult f_star(long long n, long long d_max);
ScanResult f_star_serial(long long n, long long d_max);

/// g*(n,d_max) = max of g(n,k,d_max) over admissible k with at least
/// ceil(sqrt(n)) small vertices (k <= n-1-ceil(sqrt(n))). Near k = n-2 the
/// correction term of g degenerates to ~2*d_max and the resulting band is
/// always empty; the sqrt cutoff keeps g*/C(n-1,2) convergent to c1*(c2)
/// while still admitting every fixed fraction k/n for large n. The
/// per-sequence realization bound uses g_val at the decomposition k
/// directly and is not affected by this cutoff.
ScanResult g_star(long long n, long long d_max);
ScanResult g_star_serial(long long n, long long d_max);

}  // namespace hg3

#endif
