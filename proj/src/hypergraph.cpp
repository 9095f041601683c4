#include "hg3/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace hg3 {

Edge make_edge(int a, int b, int c) {
    Edge e{a, b, c};
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2]) {
        throw std::invalid_argument("edge vertices must be distinct");
    }
    return e;
}

Hypergraph3::Hypergraph3(int n) : n_(n), inc_(n), deg_(n, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

void Hypergraph3::check_edge(const Edge& e) const {
    if (!(e[0] < e[1] && e[1] < e[2])) {
        throw std::invalid_argument("edge must be a sorted 3-set");
    }
    if (e[0] < 0 || e[2] >= n_) {
        throw std::invalid_argument("edge vertex out of range");
    }
}

void Hypergraph3::add_edge(const Edge& e) {
    check_edge(e);
    if (!edges_.insert(e).second) {
        throw std::invalid_argument("duplicate edge");
    }
    for (int v : e) {
        inc_[v].insert(e);
        ++deg_[v];
    }
}

void Hypergraph3::remove_edge(const Edge& e) {
    check_edge(e);
    if (edges_.erase(e) == 0) {
        throw std::invalid_argument("edge not present");
    }
    for (int v : e) {
        inc_[v].erase(e);
        --deg_[v];
    }
}

long long Hypergraph3::degree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    return deg_[v];
}

const std::set<Edge>& Hypergraph3::incident(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    return inc_[v];
}

DegreeSequence Hypergraph3::degree_sequence() const {
    return DegreeSequence(deg_);
}

Hypergraph3 Hypergraph3::load(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw std::runtime_error("malformed hypergraph header");
    Hypergraph3 h(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        int a, b, c;
        if (!(in >> a >> b >> c)) {
            throw std::runtime_error("malformed hypergraph edge line");
        }
        h.add_edge(make_edge(a, b, c));
    }
    return h;
}

void Hypergraph3::save(std::ostream& out) const {
    out << n_ << ' ' << edges_.size() << '\n';
    for (const Edge& e : edges_) {
        out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    }
}

}  // namespace hg3
