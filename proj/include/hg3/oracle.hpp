#ifndef HG3_ORACLE_HPP
#define HG3_ORACLE_HPP

#include <optional>

#include "hg3/hypergraph.hpp"

namespace hg3 {

enum class OracleStatus { graphic, non_graphic, budget_exceeded };

struct OracleVerdict {
    OracleStatus status = OracleStatus::budget_exceeded;
    std::optional<Hypergraph3> witness;  // present iff status == graphic
    long long nodes_explored = 0;
};

/// Exact exhaustive graphicality decision by depth-first include/skip
/// search over candidate edges in lexicographic order, with residual-degree
/// pruning. Ground truth for small n (n <= 12 recommended). Deterministic;
/// a graphic verdict carries a witness realizing D in input order.
OracleVerdict is_graphic_exhaustive(const DegreeSequence& d,
                                    long long node_budget = 100000000);

}  // namespace hg3

#endif
