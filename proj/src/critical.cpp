#include "hg3/critical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hg3 {

CriticalCase critical_case(long long n, long long k, long long d_max) {
    if (d_max <= choose2(k - 1)) return CriticalCase::C0;
    if (d_max <= choose2(k - 1) + (n - k) * (k - 1)) return CriticalCase::C1;
    return CriticalCase::C2;
}

std::vector<std::string> param_violations(long long n, long long k,
                                          long long d_max) {
    std::vector<std::string> v;
    if (n < 1) v.push_back("n must be >= 1");
    if (k < 1 || k > n) v.push_back("k must be in {1..n}");
    if (d_max < 0) v.push_back("d_max must be non-negative");
    if (d_max > choose2(n - 1)) v.push_back("d_max exceeds C(n-1,2)");
    if (!v.empty()) return v;

    if ((k * d_max) % 3 == 1 && k > n - 2) {
        v.push_back("k*d_max = 1 (mod 3) requires k <= n-2");
    }
    if ((k * d_max) % 3 == 2 && k > n - 1) {
        v.push_back("k*d_max = 2 (mod 3) requires k <= n-1");
    }
    if (critical_case(n, k, d_max) == CriticalCase::C1 &&
        (k * (d_max - choose2(k - 1))) % 2 == 1 && k > n - 2) {
        v.push_back("odd C1 parity requires k <= n-2");
    }
    return v;
}

CriticalParams validate_params(long long n, long long k, long long d_max) {
    auto v = param_violations(n, k, d_max);
    if (!v.empty()) {
        std::ostringstream msg;
        msg << "invalid critical params (" << n << "," << k << "," << d_max
            << "):";
        for (const auto& s : v) msg << ' ' << s << ';';
        throw std::invalid_argument(msg.str());
    }
    return CriticalParams{n, k, d_max};
}

long long small_degree_sum(const CriticalParams& p) {
    const long long n = p.n, k = p.k, d = p.d_max;
    switch (p.case_tag()) {
        case CriticalCase::C0:
            return (2 * k * d) % 3;
        case CriticalCase::C1: {
            long long t = k * (d - choose2(k - 1));
            return t / 2 + 2 * (t % 2);
        }
        case CriticalCase::C2:
            return choose2(k) * (n - k) +
                   2 * k * (d - choose2(k - 1) - (n - k) * (k - 1));
    }
    return 0;  // unreachable
}

DegreeSequence critical_sequence(const CriticalParams& p) {
    validate_params(p.n, p.k, p.d_max);
    const long long n = p.n, k = p.k;
    std::vector<long long> out;
    out.reserve(n);
    const long long s = small_degree_sum(p);
    const long long m = n - k;
    if (m == 0) {
        if (s != 0) throw InternalInconsistencyError("k = n with small mass");
    } else if (p.case_tag() == CriticalCase::C0) {
        for (long long i = 0; i < s; ++i) out.push_back(1);
        for (long long i = s; i < m; ++i) out.push_back(0);
    } else {
        long long hi = s % m;
        for (long long i = 0; i < hi; ++i) out.push_back(ceil_div(s, m));
        for (long long i = hi; i < m; ++i) out.push_back(s / m);
    }
    for (long long i = 0; i < k; ++i) out.push_back(p.d_max);
    std::sort(out.begin(), out.end());
    return DegreeSequence(std::move(out));
}

namespace {

// Batch edge counts per case, in the order 3L, 2L1S, 1L2S.
struct BatchCounts {
    long long n3l = 0;
    long long n2l1s = 0;
    long long n1l2s = 0;
};

BatchCounts batch_counts(const CriticalParams& p) {
    const long long n = p.n, k = p.k, d = p.d_max;
    BatchCounts b;
    switch (p.case_tag()) {
        case CriticalCase::C0: {
            b.n3l = (k * d) / 3;
            long long rem = (k * d) % 3;
            if (rem == 1) b.n1l2s = 1;
            if (rem == 2) b.n2l1s = 1;
            break;
        }
        case CriticalCase::C1: {
            b.n3l = choose3(k);
            long long t = k * (d - choose2(k - 1));
            b.n2l1s = t / 2;
            b.n1l2s = t % 2;
            break;
        }
        case CriticalCase::C2:
            b.n3l = choose3(k);
            b.n2l1s = choose2(k) * (n - k);
            b.n1l2s = k * (d - choose2(k - 1) - (n - k) * (k - 1));
            break;
    }
    return b;
}

}  // namespace

std::pair<Hypergraph3, VertexPartition> critical_hypergraph(
    const CriticalParams& p, bool skip_rounding_edge) {
    validate_params(p.n, p.k, p.d_max);
    const int n = static_cast<int>(p.n);
    const int k = static_cast<int>(p.k);
    Hypergraph3 h(n);
    std::vector<VertexLabel> labels(n, VertexLabel::S);
    for (int v = 0; v < k; ++v) labels[v] = VertexLabel::L;
    VertexPartition part(std::move(labels));

    const BatchCounts b = batch_counts(p);
    // Batched edges, lexicographically smallest of each mandated type.
    long long left = b.n3l;
    for (int a = 0; a < k && left > 0; ++a) {
        for (int x = a + 1; x < k && left > 0; ++x) {
            for (int c = x + 1; c < k && left > 0; ++c) {
                h.add_edge({a, x, c});
                --left;
            }
        }
    }
    if (left != 0) throw InternalInconsistencyError("3L batch exhausted");
    left = b.n2l1s;
    for (int a = 0; a < k && left > 0; ++a) {
        for (int x = a + 1; x < k && left > 0; ++x) {
            for (int s = k; s < n && left > 0; ++s) {
                h.add_edge({a, x, s});
                --left;
            }
        }
    }
    if (left != 0) throw InternalInconsistencyError("2L1S batch exhausted");
    left = b.n1l2s;
    for (int a = 0; a < k && left > 0; ++a) {
        for (int s1 = k; s1 < n && left > 0; ++s1) {
            for (int s2 = s1 + 1; s2 < n && left > 0; ++s2) {
                h.add_edge({a, s1, s2});
                --left;
            }
        }
    }
    if (left != 0) throw InternalInconsistencyError("1L2S batch exhausted");

    std::vector<int> large, small;
    for (int v = 0; v < k; ++v) large.push_back(v);
    for (int v = k; v < n; ++v) small.push_back(v);
    equalize_regular(h, large, p.d_max);
    equalize_almost_regular(h, small);

    if (skip_rounding_edge && p.case_tag() == CriticalCase::C1 &&
        b.n1l2s == 1) {
        // Drop the single parity edge; its type count is invariant under
        // the equalization flips, so exactly one 1L2S edge exists.
        Edge parity{};
        bool found = false;
        for (const Edge& e : h.edges()) {
            if (classify_edge(e, part) == EdgeType{1, 0, 2}) {
                parity = e;
                found = true;
                break;
            }
        }
        if (!found) throw InternalInconsistencyError("missing parity 1L2S edge");
        h.remove_edge(parity);
    }
    return {std::move(h), std::move(part)};
}

Rational f0_exact(long long n, long long k, long long d_max) {
    if (k >= n) throw std::invalid_argument("f0 requires k <= n-1");
    if (k < 0) throw std::invalid_argument("f0 requires k >= 0");
    if (k == 0) return Rational(0);
    return Rational(small_degree_sum(CriticalParams{n, k, d_max}), n - k);
}

long long f_val(long long n, long long k, long long d_max) {
    if (k >= n) throw std::invalid_argument("f requires k <= n-1");
    if (k == 0) return 0;
    return ceil_div(small_degree_sum(CriticalParams{n, k, d_max}), n - k);
}

long long g_val(long long n, long long k, long long d_max) {
    if (k >= n - 1) throw std::invalid_argument("g requires k <= n-2");
    long long f = f_val(n, k, d_max);
    return f + ceil_div(2 * (d_max - f), n - k - 1);
}

namespace {

template <typename Fn>
ScanResult scan_serial(long long n, long long d_max, long long k_max, Fn fn) {
    bool found = false;
    ScanResult best{0, 0};
    for (long long k = 1; k <= k_max; ++k) {
        if (!param_violations(n, k, d_max).empty()) continue;
        long long v = fn(k);
        if (!found || v > best.value) {
            best = {v, k};
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("no admissible k in scan range");
    return best;
}

template <typename Fn>
ScanResult scan_parallel(long long n, long long d_max, long long k_max, Fn fn) {
#ifdef _OPENMP
    bool any = false;
    ScanResult best{0, 0};
#pragma omp parallel
    {
        bool t_found = false;
        ScanResult t_best{0, 0};
#pragma omp for schedule(static) nowait
        for (long long k = 1; k <= k_max; ++k) {
            if (!param_violations(n, k, d_max).empty()) continue;
            long long v = fn(k);
            if (!t_found || v > t_best.value ||
                (v == t_best.value && k < t_best.k)) {
                t_best = {v, k};
                t_found = true;
            }
        }
#pragma omp critical
        {
            if (t_found &&
                (!any || t_best.value > best.value ||
                 (t_best.value == best.value && t_best.k < best.k))) {
                best = t_best;
                any = true;
            }
        }
    }
    if (!any) throw std::invalid_argument("no admissible k in scan range");
    return best;
#else
    return scan_serial(n, d_max, k_max, fn);
#endif
}

// Largest k admitted to the g-scan: the correction term of g spreads the
// 2(d_max - f) surplus over the n-k-1 small vertices, so for k near n-2 it
// blows up to ~2*d_max and g stops saying anything about the threshold.
// Requiring at least ceil(sqrt(n)) small vertices keeps the correction
// bounded by 2*d_max/sqrt(n) (vanishing relative to C(n-1,2)) while still
// admitting every fixed fraction k/n once n is large enough.
long long g_scan_k_max(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    return std::min(n - 2, n - 1 - r);
}

}  // namespace

ScanResult f_star_serial(long long n, long long d_max) {
    return scan_serial(n, d_max, n - 1,
                       [&](long long k) { return f_val(n, k, d_max); });
}

ScanResult f_star(long long n, long long d_max) {
    return scan_parallel(n, d_max, n - 1,
                         [&](long long k) { return f_val(n, k, d_max); });
}

ScanResult g_star_serial(long long n, long long d_max) {
    return scan_serial(n, d_max, g_scan_k_max(n),
                       [&](long long k) { return g_val(n, k, d_max); });
}

ScanResult g_star(long long n, long long d_max) {
    return scan_parallel(n, d_max, g_scan_k_max(n),
                         [&](long long k) { return g_val(n, k, d_max); });
}

}  // namespace hg3
