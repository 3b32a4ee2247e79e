#pragma once

#include "flexdp/cover.hpp"
#include "flexdp/multigraph.hpp"
#include "flexdp/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace flexdp {

/// Colour index per vertex.
using Coloring = std::vector<std::uint8_t>;

/// Every listed colour chosen and no matching slot joins two chosen colours.
bool is_valid_coloring(const Multigraph & g, const Cover & cover, const ListAssignment & lists,
                       const Coloring & coloring);

/// All (H, L')-colorings in lexicographic order. Backtracks in BFS order from
/// vertex 0, pruning colours matched to earlier choices.
std::vector<Coloring> enumerate_colorings(const Multigraph & g, const Cover & cover, const ListAssignment & lists);
std::vector<Coloring> enumerate_colorings(const Multigraph & g, const Cover & cover);

/// Same search without materializing the colorings.
std::uint64_t count_colorings(const Multigraph & g, const Cover & cover, const ListAssignment & lists);

/// Two disjoint colorings of a simple tree whose union is every listed colour.
/// All lists must have size 2 and every edge carries at most one matching.
/// Throws InputError otherwise.
std::pair<Coloring, Coloring> tree_pack_2cover(const Multigraph & tree, const Cover & cover,
                                               const ListAssignment & lists);

struct WeightedColoring {
    Coloring coloring;
    Rational weight;
};

struct ColoringDistribution {
    std::vector<WeightedColoring> entries;
};

/// Pr(phi(v) = c) for each vertex and colour.
std::vector<std::array<Rational, 3>> marginals(const ColoringDistribution & dist, int vertex_count);

/// Uniform multiset of size N = lcm of the weight denominators, each coloring
/// repeated N * weight times. Throws BudgetExceeded if N exceeds `max_size` and
/// InputError if weights are negative or do not sum to 1.
std::vector<Coloring> distribution_to_multiset(const ColoringDistribution & dist,
                                               std::uint64_t max_size = 1'000'000);

/// Space-separated colour indices in vertex order.
std::string to_string(const Coloring & coloring);

} // namespace flexdp
