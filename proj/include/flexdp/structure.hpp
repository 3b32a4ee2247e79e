#pragma once

#include "flexdp/multigraph.hpp"

#include <optional>
#include <vector>

namespace flexdp {

struct ISubgraphWitness {
    int m = 0;
    /// v_1, ..., v_{2m+1}; the pairs (v_{2i-1}, v_{2i}) carry multiplicity >= 2.
    std::vector<Vertex> cycle;
};

/// Smallest m such that G contains I_m as a (not necessarily induced) subgraph,
/// with a lexicographically smallest witness cycle. Multiplicities are matched
/// with ">= required" semantics, so extra parallel edges on the single edges of
/// the cycle still count.
std::optional<ISubgraphWitness> find_i_subgraph(const Multigraph & g);

} // namespace flexdp
