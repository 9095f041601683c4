#ifndef HG3_PARTITION_HPP
#define HG3_PARTITION_HPP

#include <string>
#include <vector>

#include "hg3/hypergraph.hpp"

namespace hg3 {

/// Vertex classes: L (large degree), N (embedded/intermediate), S (small).
enum class VertexLabel : unsigned char { L, N, S };

/// A total labeling of {0..n-1} by {L,N,S}; N may be empty.
class VertexPartition {
public:
    VertexPartition() = default;
    explicit VertexPartition(std::vector<VertexLabel> labels)
        : labels_(std::move(labels)) {}

    std::size_t size() const { return labels_.size(); }
    VertexLabel label(int v) const { return labels_.at(v); }
    void set_label(int v, VertexLabel l) { labels_.at(v) = l; }

    std::vector<int> vertices_with(VertexLabel l) const;
    long long count(VertexLabel l) const;

private:
    std::vector<VertexLabel> labels_;
};

/// Composition of a 3-edge under a partition: counts of L/N/S endpoints.
/// Determines the two-part tags (3L, 2L1S, 1L2S, 3S) and the ten
/// three-part tags (3L, 2L1N, ..., 3N) uniquely.
struct EdgeType {
    int num_l = 0;
    int num_n = 0;
    int num_s = 0;

    bool operator==(const EdgeType&) const = default;
    /// Canonical tag, e.g. "2L1S", "1L1N1S", "3N".
    std::string name() const;
};

EdgeType classify_edge(const Edge& e, const VertexPartition& p);

}  // namespace hg3

#endif
