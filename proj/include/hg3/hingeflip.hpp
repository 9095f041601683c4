#ifndef HG3_HINGEFLIP_HPP
#define HG3_HINGEFLIP_HPP

#include <vector>

#include "hg3/hypergraph.hpp"

namespace hg3 {

/// One hinge flip: removes {donor} ∪ shared and adds {recipient} ∪ shared,
/// moving one unit of degree from donor to recipient.
struct FlipDescriptor {
    Edge removed{};
    Edge added{};
    int donor = -1;
    int recipient = -1;
    std::array<int, 2> shared{};
};

enum class FlipKind { balancing, neutral, reverse };

/// Builds a descriptor from the flip triple; validates shape invariants.
FlipDescriptor make_flip(int donor, int recipient, std::array<int, 2> shared);

/// balancing if deg(donor) > deg(recipient)+1, neutral if equal+1, else reverse.
FlipKind classify_flip(const Hypergraph3& h, const FlipDescriptor& f);

/// Exchanges the edge pair. Requires removed present and added absent.
void apply_flip(Hypergraph3& h, const FlipDescriptor& f);

/// Finds a balancing flip donor -> recipient, searching donor's incidence
/// list in lexicographic order. Requires deg(donor) > deg(recipient)+1;
/// under that precondition a flip always exists, so exhaustion raises
/// InternalInconsistencyError.
FlipDescriptor find_balancing_flip(const Hypergraph3& h, int donor,
                                   int recipient);

/// Balancing flips inside `subset` until every degree equals `target`.
/// Requires the subset degree sum to equal |subset|*target. Degrees outside
/// the subset are untouched (the shared pair is unconstrained).
void equalize_regular(Hypergraph3& h, const std::vector<int>& subset,
                      long long target);

/// Balancing flips inside `subset` until max degree - min degree <= 1.
void equalize_almost_regular(Hypergraph3& h, const std::vector<int>& subset);

/// One step of the majorization transfer schedule on sorted-descending
/// sequences: i = first index where cur differs from tgt (surplus), j = last
/// index with a deficit. Returns {i, j}, or {-1, -1} when cur == tgt.
/// Throws InternalInconsistencyError if cur fails to majorize tgt.
std::pair<int, int> morph_step(const std::vector<long long>& sorted_current,
                               const std::vector<long long>& sorted_target);

/// Degree-level simulation of the morph: returns the number of unit
/// transfers needed to move `current` onto `target` (as multisets).
long long morph_plan_length(std::vector<long long> current,
                            std::vector<long long> target);

/// Morphs h by balancing flips until its degree multiset equals `target`.
/// Requires equal sums, majorization of sorted degrees over sorted target,
/// and target entries within [min deg, max deg]. Returns the flip count
/// (always <= half the sorted L1 distance).
long long morph_to_target(Hypergraph3& h, const DegreeSequence& target);

}  // namespace hg3

#endif
