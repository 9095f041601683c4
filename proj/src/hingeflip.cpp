#include "hg3/hingeflip.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hg3 {

FlipDescriptor make_flip(int donor, int recipient, std::array<int, 2> shared) {
    if (donor == recipient) throw std::invalid_argument("donor == recipient");
    if (recipient == shared[0] || recipient == shared[1]) {
        throw std::invalid_argument("recipient inside shared pair");
    }
    FlipDescriptor f;
    f.donor = donor;
    f.recipient = recipient;
    f.shared = shared;
    f.removed = make_edge(donor, shared[0], shared[1]);
    f.added = make_edge(recipient, shared[0], shared[1]);
    return f;
}

FlipKind classify_flip(const Hypergraph3& h, const FlipDescriptor& f) {
    long long di = h.degree(f.donor);
    long long dj = h.degree(f.recipient);
    if (di > dj + 1) return FlipKind::balancing;
    if (di == dj + 1) return FlipKind::neutral;
    return FlipKind::reverse;
}

void apply_flip(Hypergraph3& h, const FlipDescriptor& f) {
    if (!h.contains(f.removed)) {
        throw std::invalid_argument("flip: removed edge not in hypergraph");
    }
    if (h.contains(f.added)) {
        throw std::invalid_argument("flip: added edge already present");
    }
    h.remove_edge(f.removed);
    h.add_edge(f.added);
}

FlipDescriptor find_balancing_flip(const Hypergraph3& h, int donor,
                                   int recipient) {
    if (h.degree(donor) <= h.degree(recipient) + 1) {
        throw std::invalid_argument(
            "find_balancing_flip: deg(donor) <= deg(recipient)+1");
    }
    for (const Edge& e : h.incident(donor)) {
        if (e[0] == recipient || e[1] == recipient || e[2] == recipient) {
            continue;
        }
        std::array<int, 2> x{};
        int idx = 0;
        for (int v : e) {
            if (v != donor) x[idx++] = v;
        }
        Edge added = make_edge(recipient, x[0], x[1]);
        if (!h.contains(added)) {
            return make_flip(donor, recipient, x);
        }
    }
    // Guaranteed to exist whenever the degree gap is at least 2.
    throw InternalInconsistencyError("no balancing flip found despite gap");
}

namespace {

// argmax / argmin of degree over a subset, smallest vertex index on ties.
int subset_argmax(const Hypergraph3& h, const std::vector<int>& subset) {
    int best = subset.front();
    for (int v : subset) {
        if (h.degree(v) > h.degree(best)) best = v;
    }
    return best;
}

int subset_argmin(const Hypergraph3& h, const std::vector<int>& subset) {
    int best = subset.front();
    for (int v : subset) {
        if (h.degree(v) < h.degree(best)) best = v;
    }
    return best;
}

}  // namespace

void equalize_regular(Hypergraph3& h, const std::vector<int>& subset,
                      long long target) {
    if (subset.empty()) return;
    long long sum = 0;
    for (int v : subset) sum += h.degree(v);
    if (sum != static_cast<long long>(subset.size()) * target) {
        throw std::invalid_argument("equalize_regular: sum != |subset|*target");
    }
    for (;;) {
        int hi = subset_argmax(h, subset);
        int lo = subset_argmin(h, subset);
        if (h.degree(hi) <= h.degree(lo) + 1) break;
        apply_flip(h, find_balancing_flip(h, hi, lo));
    }
    for (int v : subset) {
        if (h.degree(v) != target) {
            throw InternalInconsistencyError("equalize_regular did not converge");
        }
    }
}

void equalize_almost_regular(Hypergraph3& h, const std::vector<int>& subset) {
    if (subset.empty()) return;
    for (;;) {
        int hi = subset_argmax(h, subset);
        int lo = subset_argmin(h, subset);
        if (h.degree(hi) - h.degree(lo) <= 1) break;
        apply_flip(h, find_balancing_flip(h, hi, lo));
    }
}

std::pair<int, int> morph_step(const std::vector<long long>& cur,
                               const std::vector<long long>& tgt) {
    const int n = static_cast<int>(cur.size());
    long long pc = 0, pt = 0;
    int first = -1;
    for (int i = 0; i < n; ++i) {
        pc += cur[i];
        pt += tgt[i];
        if (pc < pt) {
            std::ostringstream msg;
            msg << "morph: majorization violated at prefix " << i;
            throw InternalInconsistencyError(msg.str());
        }
        if (first < 0 && cur[i] != tgt[i]) first = i;
    }
    if (pc != pt) {
        throw InternalInconsistencyError("morph: sums diverged");
    }
    if (first < 0) return {-1, -1};
    if (cur[first] < tgt[first]) {
        throw InternalInconsistencyError("morph: first difference is a deficit");
    }
    int last = -1;
    for (int j = n - 1; j > first; --j) {
        if (cur[j] < tgt[j]) {
            last = j;
            break;
        }
    }
    if (last < 0) {
        throw InternalInconsistencyError("morph: surplus without deficit");
    }
    return {first, last};
}

long long morph_plan_length(std::vector<long long> cur,
                            std::vector<long long> tgt) {
    std::sort(cur.rbegin(), cur.rend());
    std::sort(tgt.rbegin(), tgt.rend());
    long long steps = 0;
    for (;;) {
        auto [i, j] = morph_step(cur, tgt);
        if (i < 0) return steps;
        --cur[i];
        ++cur[j];
        std::sort(cur.rbegin(), cur.rend());
        ++steps;
    }
}

long long morph_to_target(Hypergraph3& h, const DegreeSequence& target) {
    const int n = h.num_vertices();
    if (static_cast<std::size_t>(n) != target.size()) {
        throw std::invalid_argument("morph: size mismatch");
    }
    std::vector<long long> tgt = target.values();
    std::sort(tgt.rbegin(), tgt.rend());

    std::vector<long long> cur = h.degree_sequence().values();
    long long cur_sum = std::accumulate(cur.begin(), cur.end(), 0LL);
    if (cur_sum != target.sum()) {
        throw std::invalid_argument("morph: sum mismatch");
    }
    long long lo = *std::min_element(cur.begin(), cur.end());
    long long hi = *std::max_element(cur.begin(), cur.end());
    if (tgt.front() > hi || tgt.back() < lo) {
        throw std::invalid_argument("morph: target outside current degree box");
    }

    long long flips = 0;
    std::vector<int> order(n);
    for (;;) {
        // Sort vertices by (degree desc, index asc) to align with tgt.
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&h](int a, int b) {
            return h.degree(a) > h.degree(b);
        });
        std::vector<long long> sorted(n);
        for (int i = 0; i < n; ++i) sorted[i] = h.degree(order[i]);

        auto [i, j] = morph_step(sorted, tgt);
        if (i < 0) break;
        apply_flip(h, find_balancing_flip(h, order[i], order[j]));
        ++flips;
    }
    return flips;
}

}  // namespace hg3
