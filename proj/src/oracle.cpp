#include "hg3/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace hg3 {

namespace {

enum class SearchOutcome { found, exhausted, out_of_budget };

struct Searcher {
    int n = 0;
    std::vector<Edge> candidates;           // all triples, lex order
    std::vector<std::vector<int>> suffix;   // suffix[i][v] = #candidates >= i containing v
    std::vector<long long> res;             // residual degrees
    long long sumres = 0;
    std::vector<Edge> chosen;
    long long nodes = 0;
    long long budget = 0;

    SearchOutcome dfs(std::size_t idx, bool any_included) {
        if (++nodes > budget) return SearchOutcome::out_of_budget;
        if (sumres == 0) return SearchOutcome::found;
        if (idx == candidates.size()) return SearchOutcome::exhausted;
        if (sumres > 3 * static_cast<long long>(candidates.size() - idx)) {
            return SearchOutcome::exhausted;
        }
        for (int v = 0; v < n; ++v) {
            if (res[v] > suffix[idx][v]) return SearchOutcome::exhausted;
        }

        const Edge& e = candidates[idx];
        // Symmetry cut: the lexicographically first edge of any realization
        // contains the smallest covered vertex, so before anything is
        // included only candidates through vertex 0 may be taken (degrees
        // are sorted descending, hence vertex 0 is covered when sumres > 0).
        bool may_include = res[e[0]] > 0 && res[e[1]] > 0 && res[e[2]] > 0 &&
                           (any_included || e[0] == 0);
        if (may_include) {
            for (int v : e) --res[v];
            sumres -= 3;
            chosen.push_back(e);
            SearchOutcome r = dfs(idx + 1, true);
            if (r != SearchOutcome::exhausted) return r;
            chosen.pop_back();
            sumres += 3;
            for (int v : e) ++res[v];
        }
        return dfs(idx + 1, any_included);
    }
};

}  // namespace

OracleVerdict is_graphic_exhaustive(const DegreeSequence& d,
                                    long long node_budget) {
    if (d.empty()) throw std::invalid_argument("oracle: empty sequence");
    if (node_budget <= 0) throw std::invalid_argument("oracle: budget <= 0");
    const int n = static_cast<int>(d.size());

    OracleVerdict v;
    v.nodes_explored = 0;
    if (d.sum() % 3 != 0 || !d.within_max_degree()) {
        v.status = OracleStatus::non_graphic;
        return v;
    }
    if (d.max_degree() == 0) {
        v.status = OracleStatus::graphic;
        v.witness = Hypergraph3(n);
        return v;
    }

    // Sort descending; perm[i] = original index of sorted position i.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&d](int a, int b) {
        return d[a] > d[b];
    });

    Searcher s;
    s.n = n;
    s.budget = node_budget;
    s.res.resize(n);
    for (int i = 0; i < n; ++i) s.res[i] = d[perm[i]];
    s.sumres = d.sum();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                s.candidates.push_back({a, b, c});
            }
        }
    }
    s.suffix.assign(s.candidates.size() + 1, std::vector<int>(n, 0));
    for (std::size_t i = s.candidates.size(); i-- > 0;) {
        s.suffix[i] = s.suffix[i + 1];
        for (int vv : s.candidates[i]) ++s.suffix[i][vv];
    }

    SearchOutcome out = s.dfs(0, false);
    v.nodes_explored = s.nodes;
    switch (out) {
        case SearchOutcome::out_of_budget:
            v.status = OracleStatus::budget_exceeded;
            return v;
        case SearchOutcome::exhausted:
            v.status = OracleStatus::non_graphic;
            return v;
        case SearchOutcome::found:
            break;
    }
    Hypergraph3 w(n);
    for (const Edge& e : s.chosen) {
        w.add_edge(make_edge(perm[e[0]], perm[e[1]], perm[e[2]]));
    }
    for (int i = 0; i < n; ++i) {
        if (w.degree(i) != d[i]) {
            throw InternalInconsistencyError("oracle: witness recount failed");
        }
    }
    v.status = OracleStatus::graphic;
    v.witness = std::move(w);
    return v;
}

}  // namespace hg3
