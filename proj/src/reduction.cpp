#include "hg3/reduction.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "hg3/critical.hpp"

namespace hg3 {

namespace {

// Desk-scale guard: the gadget is quadratic in n in both edges and memory.
constexpr long long kMaxEmbedN = 20000;

}  // namespace

std::map<std::string, long long> edge_type_counts(const Hypergraph3& h,
                                                  const VertexPartition& p) {
    std::map<std::string, long long> counts;
    for (const Edge& e : h.edges()) {
        ++counts[classify_edge(e, p).name()];
    }
    return counts;
}

ReductionArtifacts embed(const DegreeSequence& d0, const Rational& c2,
                         double epsilon) {
    if (d0.empty()) throw std::invalid_argument("embed: empty D0");
    if (!(epsilon > 0 && epsilon < 1)) {
        throw std::invalid_argument("embed: epsilon must be in (0,1)");
    }
    if (!(c2 > 0 && c2 < 1)) {
        throw std::invalid_argument("embed: c2 must be in (0,1)");
    }
    const long long m = static_cast<long long>(d0.size());

    // n = ceil((2m)^(1/eps)); the tiny shift guards against an exact power
    // landing just above an integer in floating point.
    long double raw = powl(2.0L * static_cast<long double>(m),
                           1.0L / static_cast<long double>(epsilon));
    const long long n = static_cast<long long>(ceill(raw - 1e-9L));
    if (n > kMaxEmbedN) {
        std::ostringstream msg;
        msg << "embed: n = " << n << " exceeds the supported limit "
            << kMaxEmbedN;
        throw std::invalid_argument(msg.str());
    }

    const long long d_max =
        static_cast<long long>(rational_floor(c2 * Rational(choose2(n - 1))));
    const long long k_star = f_star(n, d_max).k;
    if (k_star < m) {
        std::ostringstream msg;
        msg << "embed: k*(n,d_max) = " << k_star << " < m = " << m
            << " (m too small)";
        throw std::invalid_argument(msg.str());
    }
    if (choose2(k_star - 1) >= d_max) {
        throw std::invalid_argument(
            "embed: C(k*-1,2) >= d_max (m too small for the case guarantee)");
    }
    const bool case1 =
        critical_case(n, k_star, d_max) == CriticalCase::C1;

    auto built =
        critical_hypergraph(validate_params(n, k_star, d_max), true);
    Hypergraph3 h = std::move(built.first);
    DegreeSequence d_a = h.degree_sequence();

    std::vector<VertexLabel> labels(n, VertexLabel::S);
    for (long long v = 0; v < m; ++v) labels[v] = VertexLabel::N;
    for (long long v = m; v < k_star; ++v) labels[v] = VertexLabel::L;
    VertexPartition part(std::move(labels));

    // Carve H': drop all 3N, 2N1S, 1N2S edges, and in Case 1 also every
    // 1L1N1S edge.
    std::vector<Edge> doomed;
    for (const Edge& e : h.edges()) {
        EdgeType t = classify_edge(e, part);
        bool drop = (t.num_n == 3) ||
                    (t.num_n == 2 && t.num_s == 1) ||
                    (t.num_n == 1 && t.num_s == 2) ||
                    (case1 && t == EdgeType{1, 1, 1});
        if (drop) doomed.push_back(e);
    }
    for (const Edge& e : doomed) h.remove_edge(e);
    DegreeSequence d_a_prime = h.degree_sequence();

    std::vector<long long> db = d_a_prime.values();
    for (long long v = 0; v < m; ++v) db[v] += d0[v];

    ReductionArtifacts a;
    a.m = m;
    a.epsilon = epsilon;
    a.c2 = c2;
    a.n = n;
    a.d_max = d_max;
    a.k_star = k_star;
    a.case1 = case1;
    a.partition = std::move(part);
    a.h_prime = std::move(h);
    a.d0 = d0;
    a.d_a = std::move(d_a);
    a.d_a_prime = std::move(d_a_prime);
    a.d_b = DegreeSequence(std::move(db));
    return a;
}

MembershipReport verify_relaxed_membership(const ReductionArtifacts& a,
                                           double c1_star) {
    const Rational cap(choose2(a.n - 1));
    const Rational upper = a.c2 * cap;
    // The relaxation term and c1* are doubles; converting them to rationals
    // makes the comparisons themselves exact.
    const Rational relax(
        std::pow(static_cast<double>(a.n), 1.0 + a.epsilon));
    const Rational lower = Rational(c1_star) * cap - relax;

    MembershipReport r;
    r.mod3_ok = a.d_b.sum() % 3 == 0;
    r.upper_ok = true;
    r.lower_ok = true;
    bool first = true;
    for (long long d : a.d_b.values()) {
        Rational um = upper - d;
        Rational lm = Rational(d) - lower;
        if (first || um < r.min_upper_margin) r.min_upper_margin = um;
        if (first || lm < r.min_lower_margin) r.min_lower_margin = lm;
        first = false;
        if (um < 0) r.upper_ok = false;
        if (lm < 0) r.lower_ok = false;
    }
    return r;
}

Hypergraph3 compose_realization(const ReductionArtifacts& a,
                                const Hypergraph3& g0) {
    if (g0.num_vertices() != a.m) {
        throw std::invalid_argument("compose: G0 must live on m vertices");
    }
    for (long long v = 0; v < a.m; ++v) {
        if (g0.degree(static_cast<int>(v)) != a.d0[v]) {
            throw std::invalid_argument("compose: G0 does not realize D0");
        }
    }
    Hypergraph3 out = a.h_prime;
    for (const Edge& e : g0.edges()) {
        if (out.contains(e)) {
            throw InternalInconsistencyError("compose: H'[V_N] not empty");
        }
        out.add_edge(e);
    }
    if (out.degree_sequence() != a.d_b) {
        throw InternalInconsistencyError("compose: recount mismatch");
    }
    return out;
}

ExtractResult extract_inner(const Hypergraph3& g,
                            const ReductionArtifacts& a) {
    if (g.degree_sequence() != a.d_b) {
        throw std::invalid_argument("extract: G does not realize D_B");
    }
    const int m = static_cast<int>(a.m);

    std::set<Edge> touching;
    for (int v = 0; v < m; ++v) {
        const auto& inc = g.incident(v);
        touching.insert(inc.begin(), inc.end());
    }

    std::vector<long long> inner(m, 0);
    std::map<std::string, long long> outer_counts;
    for (const Edge& e : touching) {
        if (e[2] < m) {  // fully inside V_N
            for (int v : e) ++inner[v];
        } else {
            ++outer_counts[classify_edge(e, a.partition).name()];
        }
    }

    ExtractResult res;
    res.inner = DegreeSequence(std::move(inner));

    const long long kl = a.k_star - a.m;   // |V_L| in the H' sense
    const long long ns = a.n - a.k_star;   // |V_S|
    std::map<std::string, long long> expected;
    if (choose2(kl) * a.m > 0) expected["2L1N"] = choose2(kl) * a.m;
    if (kl * choose2(a.m) > 0) expected["1L2N"] = kl * choose2(a.m);
    if (!a.case1 && kl * a.m * ns > 0) expected["1L1N1S"] = kl * a.m * ns;

    for (const auto& [tag, count] : outer_counts) {
        auto it = expected.find(tag);
        if (it == expected.end()) {
            std::ostringstream msg;
            msg << "unexpected " << tag << " edges incident to V_N: " << count;
            res.deviations.push_back(msg.str());
        } else if (count != it->second) {
            std::ostringstream msg;
            msg << tag << " family incomplete: " << count << " of "
                << it->second;
            res.deviations.push_back(msg.str());
        }
    }
    for (const auto& [tag, count] : expected) {
        if (!outer_counts.count(tag)) {
            std::ostringstream msg;
            msg << tag << " family missing entirely (expected " << count
                << ")";
            res.deviations.push_back(msg.str());
        }
    }
    res.structure_ok = res.deviations.empty();
    return res;
}

}  // namespace hg3
