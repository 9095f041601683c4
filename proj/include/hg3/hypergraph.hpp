#ifndef HG3_HYPERGRAPH_HPP
#define HG3_HYPERGRAPH_HPP

#include <array>
#include <iosfwd>
#include <set>
#include <vector>

#include "hg3/degree_sequence.hpp"

namespace hg3 {

/// A 3-element edge, always stored sorted ascending.
using Edge = std::array<int, 3>;

/// Sorts and validates a triple into an Edge. Throws on repeated vertices.
Edge make_edge(int a, int b, int c);

/// A 3-uniform hypergraph on vertices {0..n-1} with a per-vertex incidence
/// index maintained incrementally (edge add/remove are the hot operations
/// of the hinge-flip loops).
class Hypergraph3 {
public:
    explicit Hypergraph3(int n);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    bool contains(const Edge& e) const { return edges_.count(e) != 0; }
    void add_edge(const Edge& e);     // throws on duplicate / out of range
    void remove_edge(const Edge& e);  // throws if absent

    long long degree(int v) const;
    const std::set<Edge>& edges() const { return edges_; }
    /// Edges incident to v, in lexicographic order.
    const std::set<Edge>& incident(int v) const;

    DegreeSequence degree_sequence() const;

    /// First line "n m", then m lines "a b c" with a < b < c, edges sorted
    /// lexicographically. Input edges may be unordered but must be
    /// duplicate-free.
    static Hypergraph3 load(std::istream& in);
    void save(std::ostream& out) const;

    bool operator==(const Hypergraph3& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    void check_edge(const Edge& e) const;

    int n_ = 0;
    std::set<Edge> edges_;
    std::vector<std::set<Edge>> inc_;
    std::vector<long long> deg_;
};

}  // namespace hg3

#endif
