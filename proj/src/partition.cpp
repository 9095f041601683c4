#include "hg3/partition.hpp"

namespace hg3 {

std::vector<int> VertexPartition::vertices_with(VertexLabel l) const {
    std::vector<int> out;
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        if (labels_[v] == l) out.push_back(static_cast<int>(v));
    }
    return out;
}

long long VertexPartition::count(VertexLabel l) const {
    long long c = 0;
    for (VertexLabel x : labels_) {
        if (x == l) ++c;
    }
    return c;
}

std::string EdgeType::name() const {
    std::string s;
    const std::pair<int, char> parts[] = {{num_l, 'L'}, {num_n, 'N'}, {num_s, 'S'}};
    for (auto [c, ch] : parts) {
        if (c > 0) {
            s += static_cast<char>('0' + c);
            s += ch;
        }
    }
    return s;
}

EdgeType classify_edge(const Edge& e, const VertexPartition& p) {
    EdgeType t;
    for (int v : e) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size()) {
            throw std::invalid_argument("edge vertex outside partition");
        }
        switch (p.label(v)) {
            case VertexLabel::L: ++t.num_l; break;
            case VertexLabel::N: ++t.num_n; break;
            case VertexLabel::S: ++t.num_s; break;
        }
    }
    return t;
}

}  // namespace hg3
