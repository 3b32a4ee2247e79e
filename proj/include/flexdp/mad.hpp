#pragma once

#include "flexdp/multigraph.hpp"
#include "flexdp/rational.hpp"

#include <vector>

namespace flexdp {

struct DensestSubgraph {
    /// max over nonempty U of |E(G[U])| / |U|, edges counted with multiplicity.
    Rational density;
    /// A vertex set attaining the density.
    std::vector<Vertex> vertices;
};

/// Exact densest subgraph by parametric search over candidate densities p/q
/// (q <= |V|), each decided with an integer max-flow closure computation.
/// Throws InputError on a graph with no vertices.
DensestSubgraph densest_subgraph(const Multigraph & g);

/// Maximum average degree: twice the maximum density.
Rational mad(const Multigraph & g);

} // namespace flexdp
