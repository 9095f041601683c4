#ifndef HG3_REDUCTION_HPP
#define HG3_REDUCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "hg3/partition.hpp"

namespace hg3 {

/// Everything produced by the embedding: the gadget hypergraph H' and the
/// degree sequences D_A (critical hypergraph H), D_A' (H' after edge
/// removal), and D_B = D_A' + D0 on the V_N segment.
///
/// Vertex layout: V_N = {0..m-1}, V_L = {m..k_star-1}, V_S = {k_star..n-1}.
struct ReductionArtifacts {
    long long m = 0;
    double epsilon = 0;
    Rational c2;
    long long n = 0;
    long long d_max = 0;
    long long k_star = 0;
    bool case1 = false;  // d_max <= C(k*-1,2) + (n-k*)(k*-1)
    VertexPartition partition;
    Hypergraph3 h_prime{1};
    DegreeSequence d0;
    DegreeSequence d_a;
    DegreeSequence d_a_prime;
    DegreeSequence d_b;
};

/// Count of edges per composition tag ("3L", "2L1N", ...), absent tags
/// omitted.
std::map<std::string, long long> edge_type_counts(const Hypergraph3& h,
                                                  const VertexPartition& p);

/// Builds the embedding for D0: n = ceil((2m)^(1/epsilon)), critical
/// hypergraph at d_max = floor(c2*C(n-1,2)) and k = k*(n,d_max) (the Case 1
/// rounding 1L2S edge is never added), V_N = the m smallest-indexed large
/// vertices, then removal of all 3N, 2N1S, 1N2S edges (and all 1L1N1S edges
/// in Case 1).
///
/// Throws std::invalid_argument when epsilon is out of (0,1), when the
/// resulting n is beyond desk scale, or when m is too small for the
/// structural guarantees (k* < m, or d_max <= C(k*-1,2)).
ReductionArtifacts embed(const DegreeSequence& d0, const Rational& c2,
                         double epsilon);

/// Per-vertex margin check of D_B against the relaxed class
/// [c1_star*C(n-1,2) - n^(1+eps), c2*C(n-1,2)] plus the mod-3 condition.
/// The lower bound may fail at small m; margins are reported, not hidden.
struct MembershipReport {
    bool mod3_ok = false;
    bool upper_ok = false;
    bool lower_ok = false;
    Rational min_upper_margin;  // min over v of c2*C(n-1,2) - d_v
    Rational min_lower_margin;  // min over v of d_v - (c1*C(n-1,2) - n^(1+eps))
};

MembershipReport verify_relaxed_membership(const ReductionArtifacts& a,
                                           double c1_star);

/// H' with a realization of D0 glued onto V_N. G0 must live on m vertices
/// and realize D0 entrywise; the result realizes D_B (verified by recount).
Hypergraph3 compose_realization(const ReductionArtifacts& a,
                                const Hypergraph3& g0);

/// Degree sequence of G[V_N] plus a structure report: whether the
/// V_N-incident edges outside G[V_N] are exactly the complete 2L1N + 1L2N
/// families (Case 1) or 2L1N + 1L2N + 1L1N1S (Case 2).
struct ExtractResult {
    DegreeSequence inner;
    bool structure_ok = false;
    std::vector<std::string> deviations;
};

ExtractResult extract_inner(const Hypergraph3& g, const ReductionArtifacts& a);

}  // namespace hg3

#endif
