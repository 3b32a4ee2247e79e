#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

namespace flexdp {

/// Dense vertex index in [0, vertex_count).
using Vertex = int;

/// Unordered vertex pair stored as (min, max).
struct VertexPair {
    Vertex lo = 0;
    Vertex hi = 0;

    friend auto operator<=>(const VertexPair &, const VertexPair &) = default;
};

VertexPair make_vertex_pair(Vertex u, Vertex v) noexcept;

struct EdgeSpec {
    Vertex u = 0;
    Vertex v = 0;
    int multiplicity = 1;
};

/// Loopless multigraph. Parallel edges are kept as a count per vertex pair.
/// Immutable after construction.
class Multigraph {
public:
    Multigraph() = default;

    /// Duplicate pairs in `edges` have their multiplicities summed.
    /// Throws InputError on loops, out-of-range endpoints, or multiplicity < 1.
    Multigraph(int vertex_count, const std::vector<EdgeSpec> & edges);

    int vertex_count() const noexcept { return vertex_count_; }
    /// Number of edges counted with multiplicity.
    int edge_count() const noexcept { return edge_count_; }
    const std::map<VertexPair, int> & pairs() const noexcept { return pairs_; }

    int multiplicity(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    /// Distinct neighbours in increasing order.
    const std::vector<Vertex> & neighbors(Vertex v) const;

    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < vertex_count_; }
    bool is_simple() const noexcept;
    bool is_connected() const;
    std::vector<std::vector<Vertex>> components() const;

    /// Deletes one copy of the edge uv.
    Multigraph without_edge(Vertex u, Vertex v) const;
    /// Deletes v; vertices above v shift down by one.
    Multigraph without_vertex(Vertex v) const;
    /// Subgraph induced by `keep` (sorted, distinct); vertex i of the result is keep[i].
    Multigraph induced(std::span<const Vertex> keep) const;

    std::vector<EdgeSpec> edge_list() const;

    friend bool operator==(const Multigraph & a, const Multigraph & b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.pairs_ == b.pairs_;
    }

private:
    int vertex_count_ = 0;
    int edge_count_ = 0;
    std::map<VertexPair, int> pairs_;
    std::vector<int> degree_;
    std::vector<std::vector<Vertex>> neighbors_;
};

/// Per-vertex potential rho(v) in {3,4,6} and basepoint colour in {0,1,2}.
class PotentialAssignment {
public:
    PotentialAssignment() = default;
    /// Throws InputError on values outside {3,4,6} / {0,1,2} or size mismatch.
    explicit PotentialAssignment(std::vector<int> rho, std::vector<int> basepoint = {});

    static PotentialAssignment uniform(int vertex_count, int rho = 6);

    int size() const noexcept { return static_cast<int>(rho_.size()); }
    int rho(Vertex v) const { return rho_.at(static_cast<std::size_t>(v)); }
    int basepoint(Vertex v) const { return basepoint_.at(static_cast<std::size_t>(v)); }
    /// List size h(v): 2 on rho = 3, otherwise 3.
    int list_size(Vertex v) const { return rho(v) == 3 ? 2 : 3; }

    void set_rho(Vertex v, int value);
    void set_basepoint(Vertex v, int color);

    const std::vector<int> & rho_values() const noexcept { return rho_; }
    const std::vector<int> & basepoints() const noexcept { return basepoint_; }

    /// Restriction to `keep`, renumbered as in Multigraph::induced.
    PotentialAssignment restricted(std::span<const Vertex> keep) const;
    PotentialAssignment without_vertex(Vertex v) const;

    friend bool operator==(const PotentialAssignment &, const PotentialAssignment &) = default;

private:
    std::vector<int> rho_;
    std::vector<int> basepoint_;
};

/// Sum of rho over U minus four times the edges (with multiplicity) inside U.
/// U is treated as a set. Throws InputError if U leaves V(G).
int potential(const Multigraph & g, const PotentialAssignment & rho, std::span<const Vertex> subset);
int potential(const Multigraph & g, const PotentialAssignment & rho);

/// rho(v) - 2 d(v).
int sigma(const Multigraph & g, const PotentialAssignment & rho, Vertex v);

/// Edges (with multiplicity) with one end in `a` and the other in `b`. The sets must be disjoint.
int edges_between(const Multigraph & g, std::span<const Vertex> a, std::span<const Vertex> b);

} // namespace flexdp
